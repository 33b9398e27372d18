#include "kappa/problem_file.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

namespace kappa::io {
namespace {

[[noreturn]] void shape_error(const std::string& path, const std::string& what) {
  throw ParseError(what, path.empty() ? std::string("/") : path);
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) shape_error(path, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) shape_error(path, "expected an array");
  return j;
}

void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      shape_error(child(path, key), "unexpected key '" + key + "'");
    }
  }
}

const Json& field(const Json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) shape_error(path, "missing key '" + std::string(key) + "'");
  return *it;
}

std::string string_from(const Json& j, const std::string& path) {
  if (!j.is_string()) shape_error(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_from(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_from(j[i], child(path, i)));
  return out;
}

std::vector<ExtNat> ext_nats_from(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<ExtNat> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ext_nat_from_json(j[i], child(path, i)));
  }
  return out;
}

double real_from(const Json& j, const std::string& path) {
  if (!j.is_number()) shape_error(path, "expected a number");
  return j.get<double>();
}

std::vector<double> reals_from(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real_from(j[i], child(path, i)));
  return out;
}

template <class Range>
Json array_of(const Range& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (const auto pos = message.find("syntax error"); pos != std::string::npos) {
      message = message.substr(pos);
    }
    throw ParseError(message,
                     "line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

Json to_json(ExtNat v) {
  if (v.is_inf()) return "inf";
  return v.value();
}

ExtNat ext_nat_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return INF;
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > ExtNat::kMaxFinite) shape_error(path, "integer too large");
    return v;
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  shape_error(path, "expected a non-negative integer or \"inf\"");
}

Json to_json(ExtInt v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

ExtInt ext_int_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return ExtInt::pos_inf();
    if (s == "-inf") return ExtInt::neg_inf();
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >= static_cast<std::uint64_t>(ExtInt::kPosInfRep)) {
      shape_error(path, "integer too large");
    }
    const auto v = j.get<std::int64_t>();
    if (v == ExtInt::kNegInfRep) shape_error(path, "integer too small");
    return v;
  }
  shape_error(path, "expected an integer, \"+inf\" or \"-inf\"");
}

Json to_json(const UtilityValue& v) { return Json::array({to_json(v.first()), to_json(v.second())}); }

UtilityValue utility_value_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) shape_error(path, "expected a pair [k1, kr]");
  return UtilityValue::make(ext_nat_from_json(j[0], child(path, 0)),
                            ext_nat_from_json(j[1], child(path, 1)));
}

Json to_json(const SimpleLottery& s) {
  Json out = Json::object();
  out["prizes"] = Json(std::vector<std::string>(s.prizes().labels().begin(),
                                                s.prizes().labels().end()));
  out["deltas"] = array_of(s.deltas());
  return out;
}

SimpleLottery simple_lottery_from_json(const Json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, {"prizes", "deltas"}, path);
  PrizeSet prizes(strings_from(field(j, "prizes", path), child(path, "prizes")));
  return SimpleLottery::make(std::move(prizes),
                             ext_nats_from(field(j, "deltas", path), child(path, "deltas")));
}

Json to_json(const Lottery& l) {
  if (l.is_leaf()) return l.prizes()[l.prize()];
  Json out = Json::array();
  for (const auto& b : l.branches()) {
    Json branch = Json::object();
    branch["delta"] = to_json(b.delta);
    branch["child"] = to_json(b.child);
    out.push_back(std::move(branch));
  }
  return out;
}

Lottery lottery_from_json(const Json& j, const PrizeSet& prizes, const std::string& path) {
  if (j.is_string()) return Lottery::leaf(prizes, j.get<std::string>());
  if (!j.is_array()) shape_error(path, "expected a prize label or a list of branches");
  std::vector<Branch> branches;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = child(path, i);
    const Json& b = expect_object(j[i], at);
    check_keys(b, {"delta", "child"}, at);
    branches.push_back({ext_nat_from_json(field(b, "delta", at), child(at, "delta")),
                        lottery_from_json(field(b, "child", at), prizes, child(at, "child"))});
  }
  return Lottery::node(std::move(branches));
}

Json to_json(const DisbeliefFunction& d) {
  Json out = Json::object();
  out["worlds"] = Json(std::vector<std::string>(d.frame().worlds().begin(),
                                                d.frame().worlds().end()));
  out["potential"] = array_of(d.potential());
  return out;
}

DisbeliefFunction disbelief_from_json(const Json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, {"worlds", "potential"}, path);
  Frame frame(strings_from(field(j, "worlds", path), child(path, "worlds")));
  return DisbeliefFunction::make(
      std::move(frame), ext_nats_from(field(j, "potential", path), child(path, "potential")));
}

Json to_json(const PrizeAssessment& a) {
  Json out = Json::object();
  for (std::size_t i = 0; i < a.prizes().size(); ++i) out[a.prizes()[i]] = to_json(a.of(i));
  return out;
}

PrizeAssessment assessment_from_json(const Json& j, const PrizeSet& prizes,
                                     const std::string& path) {
  expect_object(j, path);
  std::map<std::string, UtilityValue> values;
  for (const auto& [prize, value] : j.items()) {
    values.emplace(prize, utility_value_from_json(value, child(path, prize)));
  }
  return PrizeAssessment::make(prizes, values);
}

Json to_json(const DecisionProblem& p) {
  Json out = Json::object();
  out["states"] = Json(std::vector<std::string>(p.states().worlds().begin(),
                                                p.states().worlds().end()));
  out["belief"] = array_of(p.belief().potential());
  out["acts"] = Json(std::vector<std::string>(p.acts().begin(), p.acts().end()));
  Json outcomes = Json::object();
  for (std::size_t a = 0; a < p.acts().size(); ++a) {
    Json row = Json::object();
    for (std::size_t s = 0; s < p.states().size(); ++s) {
      row[p.states()[s]] = p.prizes()[p.outcome(a, s)];
    }
    outcomes[p.acts()[a]] = std::move(row);
  }
  out["outcomes"] = std::move(outcomes);
  return out;
}

DecisionProblem decision_from_json(const Json& j, const PrizeAssessment& assessment,
                                   const std::string& path) {
  expect_object(j, path);
  check_keys(j, {"states", "belief", "acts", "outcomes"}, path);
  const auto states = strings_from(field(j, "states", path), child(path, "states"));
  const auto potential = ext_nats_from(field(j, "belief", path), child(path, "belief"));
  auto acts = strings_from(field(j, "acts", path), child(path, "acts"));
  const std::string outcomes_path = child(path, "outcomes");
  const Json& outcomes = expect_object(field(j, "outcomes", path), outcomes_path);

  // Shape first, so that a wrongly typed cell is a parse error.
  std::map<std::string, std::map<std::string, std::string>> table;
  for (const auto& [act, row] : outcomes.items()) {
    const std::string row_path = child(outcomes_path, act);
    expect_object(row, row_path);
    for (const auto& [state, prize] : row.items()) {
      table[act][state] = string_from(prize, child(row_path, state));
    }
  }

  auto belief = DisbeliefFunction::make(Frame(states), potential);
  for (const auto& [act, row] : table) {
    if (std::find(acts.begin(), acts.end(), act) == acts.end()) {
      throw Error(Errc::UnknownAct, "outcomes name unknown act '" + act + "'");
    }
    for (const auto& [state, prize] : row) belief.frame().index_of(state);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& act : acts) {
    const auto it = table.find(act);
    if (it == table.end()) {
      throw Error(Errc::InvalidProblem, "act '" + act + "' has no outcome row");
    }
    std::vector<std::string> row;
    for (const auto& state : states) {
      const auto cell = it->second.find(state);
      if (cell == it->second.end()) {
        throw Error(Errc::InvalidProblem,
                    "act '" + act + "' has no outcome in state '" + state + "'");
      }
      row.push_back(cell->second);
    }
    rows.push_back(std::move(row));
  }
  return DecisionProblem::make(std::move(acts), rows, std::move(belief), assessment);
}

Json to_json(const ProbLottery& l) {
  Json out = Json::object();
  out["probs"] = Json(std::vector<double>(l.probs().begin(), l.probs().end()));
  out["utils"] = Json(std::vector<double>(l.utils().begin(), l.utils().end()));
  return out;
}

ProbLottery prob_lottery_from_json(const Json& j, const PrizeSet& prizes,
                                   const std::string& path) {
  expect_object(j, path);
  check_keys(j, {"probs", "utils", "epsilon"}, path);
  return ProbLottery::make(prizes, reals_from(field(j, "probs", path), child(path, "probs")),
                           reals_from(field(j, "utils", path), child(path, "utils")));
}

Json to_json(const AgreementReport& r) {
  Json out = Json::object();
  out["kappa_of_eu"] = to_json(r.kappa_of_eu);
  out["qualitative_eu"] = to_json(r.qualitative_eu);
  out["gap"] = r.gap;
  return out;
}

AgreementReport agreement_from_json(const Json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, {"kappa_of_eu", "qualitative_eu", "gap"}, path);
  AgreementReport r;
  r.kappa_of_eu = ext_nat_from_json(field(j, "kappa_of_eu", path), child(path, "kappa_of_eu"));
  r.qualitative_eu =
      ext_nat_from_json(field(j, "qualitative_eu", path), child(path, "qualitative_eu"));
  const Json& gap = field(j, "gap", path);
  if (!gap.is_number_integer()) shape_error(child(path, "gap"), "expected an integer");
  r.gap = gap.get<std::int64_t>();
  return r;
}

namespace {

constexpr std::string_view kSections[] = {"prizes", "assessment", "lottery", "decision",
                                          "prob_lottery"};

// Runs `build`, turning a library error into a diagnostic for `section`.
template <class F>
auto guarded(std::string_view section, std::vector<Diagnostic>& diagnostics, F&& build)
    -> std::optional<decltype(build())> {
  try {
    return build();
  } catch (const Error& e) {
    diagnostics.push_back({std::string(section), e.code(), e.what()});
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::string> present_sections(const Json& doc) {
  std::vector<std::string> out;
  for (auto s : kSections) {
    if (doc.is_object() && doc.contains(s)) out.emplace_back(s);
  }
  return out;
}

ProblemFile load_problem(const Json& doc, std::vector<Diagnostic>& diagnostics) {
  expect_object(doc, "");
  check_keys(doc, {"prizes", "assessment", "lottery", "decision", "prob_lottery"}, "");
  ProblemFile file;

  const auto labels = strings_from(field(doc, "prizes", ""), "/prizes");
  file.prizes = guarded("prizes", diagnostics, [&] { return PrizeSet(labels); });
  if (!file.prizes) return file;
  const PrizeSet& prizes = *file.prizes;

  if (doc.contains("assessment")) {
    file.assessment = guarded("assessment", diagnostics, [&] {
      return assessment_from_json(doc["assessment"], prizes, "/assessment");
    });
  }
  if (doc.contains("lottery")) {
    file.lottery = guarded("lottery", diagnostics, [&] {
      return lottery_from_json(doc["lottery"], prizes, "/lottery");
    });
  }
  if (doc.contains("decision")) {
    if (!doc.contains("assessment")) {
      diagnostics.push_back(
          {"decision", Errc::InvalidProblem, "decision requires an assessment section"});
    } else if (file.assessment) {
      file.decision = guarded("decision", diagnostics, [&] {
        return decision_from_json(doc["decision"], *file.assessment, "/decision");
      });
    }
  }
  if (doc.contains("prob_lottery")) {
    const Json& section = doc["prob_lottery"];
    file.prob_lottery = guarded("prob_lottery", diagnostics, [&] {
      return prob_lottery_from_json(section, prizes, "/prob_lottery");
    });
    if (section.is_object() && section.contains("epsilon")) {
      const double eps = real_from(section["epsilon"], "/prob_lottery/epsilon");
      file.epsilon = guarded("prob_lottery", diagnostics, [&] { return EpsilonBase(eps); });
    }
  }
  return file;
}

Json to_json(const ProblemFile& file) {
  Json out = Json::object();
  if (file.prizes) {
    out["prizes"] = Json(std::vector<std::string>(file.prizes->labels().begin(),
                                                  file.prizes->labels().end()));
  }
  if (file.assessment) out["assessment"] = to_json(*file.assessment);
  if (file.lottery) out["lottery"] = to_json(*file.lottery);
  if (file.decision) out["decision"] = to_json(*file.decision);
  if (file.prob_lottery) {
    Json section = to_json(*file.prob_lottery);
    if (file.epsilon) section["epsilon"] = file.epsilon->value();
    out["prob_lottery"] = std::move(section);
  }
  return out;
}

}  // namespace kappa::io
