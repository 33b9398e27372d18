#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "kappa/disbelief.hpp"

using namespace kappa;
using kappa::testing::Rng;

namespace {

Frame abc() { return Frame({"a", "b", "c"}); }
Frame ab() { return Frame({"a", "b"}); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvariantBreach;
}

std::vector<ExtNat> vec(std::initializer_list<ExtNat> v) { return v; }

}  // namespace

TEST_CASE("frames reject duplicates and emptiness") {
  CHECK(code_of([] { Frame({"a", "a"}); }) == Errc::DuplicateLabel);
  CHECK(code_of([] { Frame(std::vector<std::string>{}); }) == Errc::EmptyFrame);
  CHECK(abc().index_of("c") == 2);
  CHECK(code_of([] { abc().index_of("z"); }) == Errc::UnknownWorld);
}

TEST_CASE("make_disbelief checks normalization") {
  const auto d = DisbeliefFunction::make(abc(), vec({0, 2, 5}));
  CHECK(d.at("c") == ExtNat{5});
  CHECK(code_of([] { DisbeliefFunction::make(ab(), vec({1, 2})); }) == Errc::NotNormalized);
  CHECK(DisbeliefFunction::make(ab(), vec({0, INF}))[1] == INF);
  CHECK(code_of([] { DisbeliefFunction::make(ab(), vec({INF, INF})); }) == Errc::AllInfinite);
  CHECK(code_of([] { DisbeliefFunction::make(ab(), vec({0})); }) == Errc::LengthMismatch);
}

TEST_CASE("normalize shifts by the finite minimum") {
  CHECK(normalize(vec({3, 5, INF})) == vec({0, 2, INF}));
  CHECK(normalize(vec({0, 1})) == vec({0, 1}));
  CHECK(code_of([] { normalize(vec({INF, INF})); }) == Errc::AllInfinite);
}

TEST_CASE("rank of an event is the minimum over its worlds") {
  const auto d = DisbeliefFunction::make(abc(), vec({0, 2, 5}));
  CHECK(disbelief_of_event(d, {"b", "c"}) == ExtNat{2});
  CHECK(disbelief_of_event(d, {}) == INF);
  CHECK(disbelief_of_event(d, {"a", "b", "c"}) == ExtNat{0});
  CHECK(code_of([&] { disbelief_of_event(d, {"q"}); }) == Errc::UnknownWorld);
}

TEST_CASE("conditioning") {
  const auto d = DisbeliefFunction::make(abc(), vec({0, 2, 5}));
  CHECK(condition(d, {"b", "c"}).potential()[0] == INF);
  CHECK(condition(d, {"b", "c"}) == DisbeliefFunction::make(abc(), vec({INF, 0, 3})));
  CHECK(condition(d, {"a", "b", "c"}) == d);
  const auto certain = DisbeliefFunction::make(ab(), vec({0, INF}));
  CHECK(code_of([&] { condition(certain, {"b"}); }) == Errc::ConditionOnDisbelievedCertainty);
}

TEST_CASE("combination is pointwise addition then normalization") {
  const auto a = DisbeliefFunction::make(ab(), vec({0, 2}));
  const auto b = DisbeliefFunction::make(ab(), vec({1, 0}));
  CHECK(combine(a, b) == DisbeliefFunction::make(ab(), vec({0, 1})));
  const auto zeros = DisbeliefFunction::make(ab(), vec({0, 0}));
  CHECK(combine(a, zeros) == a);
  const auto x = DisbeliefFunction::make(ab(), vec({0, INF}));
  const auto y = DisbeliefFunction::make(ab(), vec({INF, 0}));
  CHECK(code_of([&] { combine(x, y); }) == Errc::AllInfinite);
  const auto other = DisbeliefFunction::make(Frame({"a", "z"}), vec({0, 0}));
  CHECK(code_of([&] { combine(a, other); }) == Errc::FrameMismatch);
}

TEST_CASE("marginalization takes group minima") {
  const auto d = DisbeliefFunction::make(abc(), vec({0, 2, 5}));
  const auto m = marginalize(d, {{"a", "X"}, {"b", "X"}, {"c", "Y"}});
  CHECK(m == DisbeliefFunction::make(Frame({"X", "Y"}), vec({0, 5})));
  CHECK(marginalize(d, {{"a", "a"}, {"b", "b"}, {"c", "c"}}) == d);
  CHECK(marginalize(d, {{"a", "*"}, {"b", "*"}, {"c", "*"}}) ==
        DisbeliefFunction::make(Frame({"*"}), vec({0})));
  CHECK(code_of([&] { marginalize(d, {{"a", "X"}, {"b", "X"}}); }) == Errc::IncompleteGrouping);
  CHECK(code_of([&] { marginalize(d, {{"a", "X"}, {"b", "X"}, {"c", "X"}, {"q", "X"}}); }) ==
        Errc::UnknownWorld);
}

TEST_CASE("belief values") {
  const auto d = DisbeliefFunction::make(ab(), vec({0, 3}));
  CHECK(belief(d, {"a"}) == ExtInt(3));
  CHECK(belief(d, {"b"}) == ExtInt(-3));
  CHECK(belief(d, {"a", "b"}) == ExtInt::pos_inf());
  CHECK(belief(d, {}) == ExtInt::neg_inf());
  const auto flat = DisbeliefFunction::make(ab(), vec({0, 0}));
  CHECK(belief(flat, {"a"}) == ExtInt(0));
}

TEST_CASE("independence") {
  const Frame grid({"ac", "ad", "bc", "bd"});
  // Product potential: delta1(a) = 0, delta1(b) = 2; delta2(c) = 1, delta2(d) = 0.
  const auto product = DisbeliefFunction::make(grid, vec({1, 0, 3, 2}));
  CHECK(independent(product, {"ac", "ad"}, {"ac", "bc"}));
  CHECK(independent(product, {"bc", "bd"}, {"ad", "bd"}));
  CHECK(independent(product, {"ac", "ad", "bc", "bd"}, {"bc"}));

  const auto blocked = DisbeliefFunction::make(grid, vec({INF, 0, 0, 0}));
  CHECK_FALSE(independent(blocked, {"ac", "ad"}, {"ac", "bc"}));
}

TEST_CASE("independence agrees with the definition on every pair of events") {
  Rng rng(7);
  const auto frame = kappa::testing::numbered_frame(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = kappa::testing::random_disbelief(rng, frame, 4);
    for (unsigned ma = 0; ma < 16; ++ma) {
      for (unsigned mb = 0; mb < 16; ++mb) {
        Event a, b, both;
        ExtNat ra = INF, rb = INF, rab = INF;
        for (unsigned i = 0; i < 4; ++i) {
          if (ma >> i & 1) a.push_back(frame[i]), ra = std::min(ra, d[i]);
          if (mb >> i & 1) b.push_back(frame[i]), rb = std::min(rb, d[i]);
          if ((ma & mb) >> i & 1) rab = std::min(rab, d[i]);
        }
        REQUIRE(independent(d, a, b) == (rab == ra + rb));
      }
    }
  }
}

TEST_CASE("properties over random potentials") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto frame = kappa::testing::numbered_frame(kappa::testing::uniform_index(rng, 1, 7));
    const auto d = kappa::testing::random_disbelief(rng, frame);
    const Event a = kappa::testing::random_event(rng, frame);
    const Event b = kappa::testing::random_event(rng, frame);

    // min-additivity on disjoint parts
    Event b_only, both;
    for (const auto& w : b) {
      if (std::find(a.begin(), a.end(), w) == a.end()) b_only.push_back(w);
      else both.push_back(w);
    }
    Event a_or_b = a;
    a_or_b.insert(a_or_b.end(), b_only.begin(), b_only.end());
    CHECK(disbelief_of_event(d, a_or_b) ==
          std::min(disbelief_of_event(d, a), disbelief_of_event(d, b_only)));

    // combine commutes and associates whenever the result is defined
    const auto e = kappa::testing::random_disbelief(rng, frame);
    const auto f = kappa::testing::random_disbelief(rng, frame);
    auto defined = [&](std::initializer_list<const DisbeliefFunction*> ds) {
      for (std::size_t i = 0; i < frame.size(); ++i) {
        bool finite = true;
        for (const auto* x : ds) finite = finite && (*x)[i].is_finite();
        if (finite) return true;
      }
      return false;
    };
    if (defined({&d, &e})) {
      CHECK(combine(d, e) == combine(e, d));
      if (defined({&d, &e, &f})) {
        CHECK(combine(combine(d, e), f) == combine(d, combine(e, f)));
      }
    } else {
      CHECK_THROWS_AS(combine(d, e), Error);
    }

    // marginalization composes
    std::map<std::string, std::string> fine, coarse, direct;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const std::string mid = "m" + std::to_string(i % 3);
      fine[frame[i]] = mid;
      direct[frame[i]] = "c" + std::to_string(i % 3 % 2);
    }
    for (int k = 0; k < 3; ++k) coarse["m" + std::to_string(k)] = "c" + std::to_string(k % 2);
    const auto stepwise = marginalize(d, fine);
    std::map<std::string, std::string> present;
    for (const auto& w : stepwise.frame().worlds()) present[w] = coarse[w];
    CHECK(marginalize(stepwise, present) == marginalize(d, direct));
  }
}

TEST_CASE("conditioning stays normalized and chains") {
  Rng rng(99);
  int chained = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto frame = kappa::testing::numbered_frame(kappa::testing::uniform_index(rng, 1, 6));
    const auto d = kappa::testing::random_disbelief(rng, frame);
    const Event a = kappa::testing::random_event(rng, frame);
    const Event b = kappa::testing::random_event(rng, frame);
    if (disbelief_of_event(d, a).is_inf()) continue;
    const auto given_a = condition(d, a);
    const auto p = given_a.potential();
    CHECK(*std::min_element(p.begin(), p.end()) == ExtNat{0});

    Event ab;
    for (const auto& w : a) {
      if (std::find(b.begin(), b.end(), w) != b.end()) ab.push_back(w);
    }
    if (disbelief_of_event(given_a, b).is_inf()) continue;
    CHECK(condition(given_a, b) == condition(d, ab));
    ++chained;
  }
  CHECK(chained > 100);
}
