#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "cyclecert/common.hpp"

namespace cyclecert {

/// Closed-form bound evaluations for one parameter set. All integer fields
/// are certified: ceilings of irrational values never under-approximate,
/// and they are decided by exact comparisons, not floating point.
struct BoundReport {
  int k = 0;
  int ell = 0;
  std::optional<mpq_class> b;
  std::optional<int> chi;

  mpz_class theorem1_upper;               // ceil((4l-2)^k * k^{k/l}) + 1
  std::optional<long> theorem2_length;    // 2*ceil(log_{b/2} k) + 1
  std::optional<mpz_class> lemma_bound;   // ceil(chi^k * k^{k/l})
  mpz_class lower_bound;                  // l * 2^k + 1
};

/// Certified ceil(base^k * k^{k/ell}), decided through the exact weight
/// arithmetic (one audited implementation for weights and bounds alike).
mpz_class ceil_power_bound(const mpz_class& base, int k, int ell);

/// 2 * ceil(log_{b/2} k) + 1 for exact rational b > 2.
long theorem2_cycle_length(const mpq_class& b, int k);

/// Requires k >= 1, ell >= 1, b > 2 when given, chi >= 1 when given.
BoundReport compute_bounds(int k, int ell,
                           const std::optional<mpq_class>& b = std::nullopt,
                           const std::optional<int>& chi = std::nullopt);

/// Machine-readable key=value lines, one field per line.
std::string report_keyvalues(const BoundReport& report);

/// Human-oriented aligned rendering.
std::string report_pretty(const BoundReport& report);

/// Parses "3", "5/2" or "2.5" into an exact rational.
mpq_class parse_rational(const std::string& text);

}  // namespace cyclecert
