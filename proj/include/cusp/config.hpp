#pragma once

#include <optional>
#include <string>

#include "cusp/serialize.hpp"
#include "cusp/simple_type.hpp"

namespace cusp {

/// Cyclotomic scalar from "zeta(N)^k * a/b": a product of factors, each
/// either zeta(N), zeta(N)^k (k may be negative) or a rational a/b, with an
/// optional leading minus sign. Throws ConfigError.
CycNumber parse_scalar(const std::string& s);

struct RunConfig {
  std::string command;
  std::string family = "depth-zero";
  long q = 2;
  int n = 2;
  long theta = 1;
  long sigma = 0;
  /// Second type; defaults to the dual of the first.
  std::optional<long> theta2;
  std::optional<long> sigma2;
  std::string A = "1";
  std::string twist = "1";
  long ell = 0;
  int ideal = 0;
  int window = 2;
  int jobs = 1;
  int oracle_kmax = 6;
  std::string out;
  std::string format = "json";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

Json emit(const RunConfig& c);
/// Missing keys keep their defaults; unknown keys and bad values throw ConfigError.
RunConfig parse_run_config(const Json& j);

/// Throws ConfigError on an unknown command, family or format, or on
/// out-of-range counts.
void validate(const RunConfig& c);

/// First type: (theta or sigma, A, eps = +1).
TypeParams first_type(const RunConfig& c);
/// Second type: the dual of the first, or (theta2 or sigma2, A^{-1}, -1) when
/// given, twisted by the unramified character with value c at the uniformizer.
TypeParams second_type(const RunConfig& c);

}  // namespace cusp
