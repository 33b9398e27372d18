#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappa/problem_file.hpp"

namespace kappa::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(KAPPA_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

/// Loads a fixture that must be free of diagnostics.
inline io::ProblemFile load_fixture(const std::string& name) {
  std::vector<io::Diagnostic> diags;
  auto file = io::load_problem(io::parse_document(read_fixture(name)), diags);
  if (!diags.empty()) throw std::runtime_error(name + ": " + diags.front().message);
  return file;
}

}  // namespace kappa::testing
