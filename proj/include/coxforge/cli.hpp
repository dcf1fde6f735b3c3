#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxforge/serialize.hpp"

namespace coxforge::cli {

struct RunConfig {
  std::string command;
  int n = 5;
  std::string tau = "id";
  Rational eps = default_eps();
  int max_len = 6;
  int max_iter = kDefaultMaxIter;
  std::uint64_t seed = 2022;
  std::string output = "text";  // "json" or "text"
  std::optional<std::string> out_path;
  int n_min = 4;
  int n_max = 7;
  std::optional<std::string> poly;  // ascending coefficients, "1,-2,1"
  bool certify = false;
};

const std::vector<std::string>& commands();

struct RunReport {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 usage error
  json::Json data;    // carries "schema": 1
  std::string text;
  /// The report in the configured output format.
  std::string render(const RunConfig& cfg) const;
};

/// Executes one command. Library errors become exit code 1 (or 2 for bad
/// arguments) with the error recorded in the report instead of escaping.
RunReport run(const RunConfig& cfg);

}  // namespace coxforge::cli
