#include "kappa/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kappa/problem_file.hpp"

namespace kappa::cli {
namespace {

using io::Json;

struct Options {
  std::string command;
  std::string file;
  bool json = false;
  std::optional<double> epsilon;
  SearchBounds bounds;
};

// Six significant digits, as used for every real in bridge output.
std::string real6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string vector_text(std::span<const ExtNat> deltas) {
  std::string s = "(";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) s += ',';
    s += deltas[i].to_string();
  }
  return s + ")";
}

int report_diagnostics(const Options& opt, const std::vector<io::Diagnostic>& diags,
                       std::ostream& out, std::ostream& err) {
  if (opt.json) {
    Json j = Json::object();
    j["command"] = opt.command;
    j["ok"] = diags.empty();
    j["diagnostics"] = Json::array();
    for (const auto& d : diags) {
      j["diagnostics"].push_back(
          {{"section", d.section}, {"code", to_string(d.code)}, {"message", d.message}});
    }
    print_json(out, j);
  } else {
    std::ostream& sink = opt.command == "validate" ? out : err;
    for (const auto& d : diags) {
      sink << to_string(d.code) << ": " << d.message << "  [" << d.section << "]\n";
    }
  }
  return diags.empty() ? kSuccess : kValidationFailure;
}

int report_parse_error(const Options& opt, const io::ParseError& e, std::ostream& out,
                       std::ostream& err) {
  if (opt.json) {
    Json j = Json::object();
    j["command"] = opt.command;
    j["ok"] = false;
    j["parse_error"] = {{"where", e.where()}, {"message", e.what()}};
    print_json(out, j);
  } else {
    err << "parse error at " << e.where() << ": " << e.what() << '\n';
  }
  return kParseFailure;
}

int cmd_validate(const Options& opt, const io::ProblemFile&, const Json& doc,
                 std::ostream& out) {
  if (!opt.json) {
    out << "ok:";
    for (const auto& s : io::present_sections(doc)) out << ' ' << s;
    out << '\n';
  } else {
    Json j = Json::object();
    j["command"] = "validate";
    j["ok"] = true;
    j["diagnostics"] = Json::array();
    j["sections"] = io::present_sections(doc);
    print_json(out, j);
  }
  return kSuccess;
}

int cmd_reduce(const Options& opt, const io::ProblemFile& file, std::ostream& out) {
  const SimpleLottery reduced = reduce(*file.lottery);
  if (opt.json) {
    Json j = Json::object();
    j["command"] = "reduce";
    j["depth"] = depth(*file.lottery);
    j["lottery"] = io::to_json(reduced);
    print_json(out, j);
  } else {
    out << reduced.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_utility(const Options& opt, const io::ProblemFile& file, std::ostream& out) {
  const UtilityValue u = evaluate(*file.lottery, *file.assessment);
  const ExtInt scalar = scalar_utility(u);
  if (opt.json) {
    Json j = Json::object();
    j["command"] = "utility";
    j["utility"] = io::to_json(u);
    j["scalar"] = io::to_json(scalar);
    j["standard_equivalent"] = io::to_json(standard_equivalent(*file.lottery, *file.assessment));
    print_json(out, j);
  } else {
    out << u.to_string() << "  u = " << scalar.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_rank(const Options& opt, const io::ProblemFile& file, std::ostream& out) {
  const DecisionProblem& problem = *file.decision;
  const auto qualitative = rank_acts(problem);
  const auto maximin = maximin_rank(problem);
  const bool disagree = rules_disagree(problem);
  if (opt.json) {
    Json j = Json::object();
    j["command"] = "rank";
    j["qualitative"] = Json::array();
    for (const auto& r : qualitative) {
      j["qualitative"].push_back({{"act", r.act},
                                  {"utility", io::to_json(r.utility)},
                                  {"scalar", io::to_json(scalar_utility(r.utility))}});
    }
    j["maximin"] = Json::array();
    for (const auto& m : maximin) {
      j["maximin"].push_back({{"act", m.act}, {"worst", problem.prizes()[m.worst]}});
    }
    j["disagreement"] = disagree;
    print_json(out, j);
    return kSuccess;
  }
  out << "qualitative expected utility:\n";
  for (std::size_t i = 0; i < qualitative.size(); ++i) {
    out << "  " << i + 1 << ". " << qualitative[i].act << ' ' << qualitative[i].utility.to_string()
        << "  u = " << scalar_utility(qualitative[i].utility).to_string() << '\n';
  }
  out << "maximin:\n";
  for (std::size_t i = 0; i < maximin.size(); ++i) {
    out << "  " << i + 1 << ". " << maximin[i].act << "  worst = "
        << problem.prizes()[maximin[i].worst] << '\n';
  }
  if (disagree) {
    out << "disagreement: qualitative picks " << qualitative.front().act << ", maximin picks "
        << maximin.front().act << '\n';
  } else {
    out << "no disagreement\n";
  }
  return kSuccess;
}

int cmd_bridge(const Options& opt, const io::ProblemFile& file, std::ostream& out) {
  const EpsilonBase eps = opt.epsilon ? EpsilonBase(*opt.epsilon)
                                      : file.epsilon.value_or(EpsilonBase{});
  const ProbLottery& lottery = *file.prob_lottery;
  const SimpleLottery spohnian = spohnian_from_prob(lottery, eps);
  const double eu = vnm_eu(lottery);
  const AgreementReport report = order_agreement(lottery, eps);
  const auto bound = agreement_gap_bound(lottery.prizes().size(), eps);
  if (opt.json) {
    Json j = Json::object();
    j["command"] = "bridge";
    j["epsilon"] = std::stod(real6(eps.value()));
    j["spohnian"] = io::to_json(spohnian);
    j["eu"] = std::stod(real6(eu));
    j["agreement"] = io::to_json(report);
    j["bound"] = bound;
    j["within_bound"] = std::abs(report.gap) <= bound;
    print_json(out, j);
  } else {
    out << "spohnian: " << vector_text(spohnian.deltas()) << '\n'
        << "eu = " << real6(eu) << "  (epsilon = " << real6(eps.value()) << ")\n"
        << "kappa(eu) = " << report.kappa_of_eu.to_string() << '\n'
        << "qualitative eu = " << report.qualitative_eu.to_string() << '\n'
        << "gap = " << report.gap << "  (bound " << bound << ")\n";
  }
  return kSuccess;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
  SearchBounds bounds = opt.bounds;
  if (const char* cap = std::getenv(kSearchBoundEnv)) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(cap, &used);
      if (used != std::string_view(cap).size()) throw std::invalid_argument(cap);
      bounds.max_candidates = value;
    } catch (const std::exception&) {
      err << kSearchBoundEnv << " must be a non-negative integer, got '" << cap << "'\n";
      return kParseFailure;
    }
  }
  const auto witness = find_maximin_disagreement(bounds);
  if (opt.json) {
    Json j = Json::object();
    j["command"] = "search";
    if (witness) {
      io::ProblemFile file;
      file.prizes = witness->prizes();
      file.assessment = witness->assessment();
      file.decision = *witness;
      j["witness"] = io::to_json(file);
    } else {
      j["witness"] = nullptr;
    }
    print_json(out, j);
    return kSuccess;
  }
  if (!witness) {
    out << "none\n";
    return kSuccess;
  }
  io::ProblemFile file;
  file.prizes = witness->prizes();
  file.assessment = witness->assessment();
  file.decision = *witness;
  print_json(out, io::to_json(file));
  return kSuccess;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> required_sections(const std::string& command) {
  if (command == "reduce") return {"lottery"};
  if (command == "utility") return {"lottery", "assessment"};
  if (command == "rank") return {"decision"};
  if (command == "bridge") return {"prob_lottery"};
  return {};
}

int run_file_command(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto text = read_file(opt.file);
  if (!text) {
    return report_parse_error(opt, io::ParseError("cannot read file", opt.file), out, err);
  }
  Json doc;
  io::ProblemFile file;
  std::vector<io::Diagnostic> diags;
  try {
    doc = io::parse_document(*text);
    file = io::load_problem(doc, diags);
  } catch (const io::ParseError& e) {
    return report_parse_error(opt, e, out, err);
  }
  const auto sections = io::present_sections(doc);
  for (const auto& needed : required_sections(opt.command)) {
    if (std::find(sections.begin(), sections.end(), needed) == sections.end()) {
      diags.push_back({needed, Errc::InvalidProblem,
                       "command '" + opt.command + "' needs section '" + needed + "'"});
    }
  }
  if (!diags.empty()) return report_diagnostics(opt, diags, out, err);

  if (opt.command == "validate") return cmd_validate(opt, file, doc, out);
  if (opt.command == "reduce") return cmd_reduce(opt, file, out);
  if (opt.command == "utility") return cmd_utility(opt, file, out);
  if (opt.command == "rank") return cmd_rank(opt, file, out);
  return cmd_bridge(opt, file, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Qualitative decision analysis with Spohnian disbelief functions", "kappa"};
  app.require_subcommand(1);

  const auto add_file_command = [&](const char* name, const char* description) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("file", opt.file, "problem file (JSON)")->required();
    sub->add_flag("--json", opt.json, "machine-readable output");
    return sub;
  };
  add_file_command("validate", "check every value in a problem file");
  add_file_command("reduce", "reduce the compound lottery to a simple one");
  add_file_command("utility", "qualitative expected utility of the lottery");
  add_file_command("rank", "rank acts by qualitative expected utility and by maximin");
  add_file_command("bridge", "order-of-magnitude reading of a probabilistic lottery")
      ->add_option("--epsilon", opt.epsilon, "base of the order of magnitude (> 1)");

  auto* search = app.add_subcommand(
      "search", "exhaustively search for a problem where maximin and qualitative EU disagree");
  search->add_option("--max-prizes", opt.bounds.max_prizes, "largest prize count")
      ->capture_default_str();
  search->add_option("--max-delta", opt.bounds.max_delta, "largest finite disbelief degree")
      ->capture_default_str();
  search->add_option("--acts", opt.bounds.acts, "largest number of acts")->capture_default_str();
  search->add_flag("--json", opt.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseFailure;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    if (opt.command == "search") return cmd_search(opt, out, err);
    return run_file_command(opt, out, err);
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::InvariantBreach ? kInternalError : kValidationFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace kappa::cli
