#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kappa/decision.hpp"
#include "kappa/disbelief.hpp"
#include "kappa/lottery.hpp"
#include "kappa/oom_bridge.hpp"
#include "kappa/utility.hpp"

namespace kappa::io {

using Json = nlohmann::ordered_json;

/// Malformed document: bad JSON syntax (with 1-based line and column) or a
/// value of the wrong shape (with its JSON pointer).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string where)
      : std::runtime_error(message), where_(std::move(where)) {}

  /// "line 3, column 7" or "/lottery/0/delta".
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Parses JSON text; `//` and `/* */` comments are allowed.
Json parse_document(std::string_view text);

// Value codecs. Infinity is the string "inf" ("+inf"/"-inf" for ExtInt).
// Readers take the JSON pointer of the value for error messages.

Json to_json(ExtNat v);
ExtNat ext_nat_from_json(const Json& j, const std::string& path = "");

Json to_json(ExtInt v);
ExtInt ext_int_from_json(const Json& j, const std::string& path = "");

/// [first, second]
Json to_json(const UtilityValue& v);
UtilityValue utility_value_from_json(const Json& j, const std::string& path = "");

/// {"prizes": [...], "deltas": [...]}
Json to_json(const SimpleLottery& s);
SimpleLottery simple_lottery_from_json(const Json& j, const std::string& path = "");

/// A prize label for a leaf, or [{"delta": d, "child": ...}, ...] for a node.
Json to_json(const Lottery& l);
Lottery lottery_from_json(const Json& j, const PrizeSet& prizes, const std::string& path = "");

/// {"worlds": [...], "potential": [...]}
Json to_json(const DisbeliefFunction& d);
DisbeliefFunction disbelief_from_json(const Json& j, const std::string& path = "");

/// {"o1": [0, "inf"], ...} in prize order.
Json to_json(const PrizeAssessment& a);
PrizeAssessment assessment_from_json(const Json& j, const PrizeSet& prizes,
                                     const std::string& path = "");

/// {"states": [...], "belief": [...], "acts": [...],
///  "outcomes": {"act": {"state": "prize", ...}, ...}}
Json to_json(const DecisionProblem& p);
DecisionProblem decision_from_json(const Json& j, const PrizeAssessment& assessment,
                                   const std::string& path = "");

/// {"probs": [...], "utils": [...]}
Json to_json(const ProbLottery& l);
ProbLottery prob_lottery_from_json(const Json& j, const PrizeSet& prizes,
                                   const std::string& path = "");

/// {"kappa_of_eu": k, "qualitative_eu": q, "gap": g}
Json to_json(const AgreementReport& r);
AgreementReport agreement_from_json(const Json& j, const std::string& path = "");

/// A whole problem document. Sections that failed validation stay empty.
struct ProblemFile {
  std::optional<PrizeSet> prizes;
  std::optional<PrizeAssessment> assessment;
  std::optional<Lottery> lottery;
  std::optional<DecisionProblem> decision;
  std::optional<ProbLottery> prob_lottery;
  std::optional<EpsilonBase> epsilon;
};

struct Diagnostic {
  std::string section;
  Errc code;
  std::string message;
};

/// Sections present in the document, in canonical order.
std::vector<std::string> present_sections(const Json& doc);

/// Builds every section present in `doc`. Shape errors throw ParseError;
/// invariant violations are appended to `diagnostics` and leave the section
/// (and anything depending on it) empty.
ProblemFile load_problem(const Json& doc, std::vector<Diagnostic>& diagnostics);

/// Inverse of load_problem for fully valid files.
Json to_json(const ProblemFile& file);

}  // namespace kappa::io
