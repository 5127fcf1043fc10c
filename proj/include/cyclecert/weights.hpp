#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cyclecert/common.hpp"

namespace cyclecert {

enum class Ordering { Less, Equal, Greater };

/// Parameters of the weight function w(v) = (chi * k^{1/ell})^{-d_col(v)},
/// with the radical k^{1/ell} put into canonical form a^{p/q}: k = a^g for
/// maximal g (so a is not a perfect power), p/q = g/ell in lowest terms.
/// Values live in the module with basis {beta^r : 0 <= r < q} over the
/// rationals, beta = a^{-1/q}. For a >= 2 not a perfect power, x^q - a is
/// irreducible, so coefficient vectors are unique representations and
/// coefficient equality decides value equality.
class WeightContext {
public:
  WeightContext(int k, int ell, int chi);

  int k() const { return k_; }
  int ell() const { return ell_; }
  int chi() const { return chi_; }

  int radical_base() const { return a_; }   // a
  int root_power() const { return p_; }     // p
  int root_index() const { return q_; }     // q; 1 means purely rational

  bool operator==(const WeightContext& other) const {
    return k_ == other.k_ && ell_ == other.ell_ && chi_ == other.chi_;
  }

private:
  int k_, ell_, chi_;
  int a_, p_, q_;
};

/// Element of the rational module spanned by {beta^r}: sum_r coeff[r]*beta^r.
/// Immutable value object; all arithmetic is exact.
class WeightValue {
public:
  static WeightValue zero(const WeightContext& ctx);
  static WeightValue one(const WeightContext& ctx);
  static WeightValue integer(const WeightContext& ctx, const mpz_class& n);

  const WeightContext& context() const { return ctx_; }
  const mpq_class& coefficient(int r) const { return coeff_[r]; }
  bool is_zero() const;

  WeightValue operator+(const WeightValue& other) const;
  WeightValue operator-(const WeightValue& other) const;
  WeightValue scaled(const mpq_class& factor) const;

  friend WeightValue vertex_weight(const WeightContext&, int);
  friend WeightValue mul_root_k(const WeightValue&);
  friend Ordering compare(const WeightValue&, const WeightValue&);
  friend Ordering compare_numeric(const WeightValue&, const WeightValue&,
                                  int bits);
  friend std::string render(const WeightValue&);
  friend WeightValue parse_weight(const WeightContext&, const std::string&);
  friend double approx(const WeightValue&);

private:
  explicit WeightValue(const WeightContext& ctx);
  void require_same_context(const WeightValue& other) const;

  WeightContext ctx_;
  std::vector<mpq_class> coeff_;  // size q
};

/// Exact chi^{-d} * k^{-d/ell}. Rejects d outside [0, k].
WeightValue vertex_weight(const WeightContext& ctx, int colour_degree);

/// Multiplication by the exact factor k^{1/ell} (a shift in the beta basis).
WeightValue mul_root_k(const WeightValue& x);

/// Multiplication by alpha = chi * k^{1/ell}.
WeightValue scale_by_alpha(const WeightValue& x);

/// Multiplication by k^{1/ell} - 1.
WeightValue mul_threshold(const WeightValue& x);

/// The exact value k^{1/ell} - 1.
WeightValue layer_threshold(const WeightContext& ctx);

/// Exact three-way comparison. Equality is structural (coefficient vectors);
/// a strict sign is decided by interval evaluation of the difference at
/// doubling precision until the interval excludes zero.
Ordering compare(const WeightValue& x, const WeightValue& y);

/// Single-shot interval comparison at fixed precision; Equal means the
/// interval still straddles zero (undecided), not proven equality.
Ordering compare_numeric(const WeightValue& x, const WeightValue& y, int bits);

/// Smallest integer >= x; requires x >= 0.
mpz_class ceil_of(const WeightValue& x);

/// Debug rendering `poly <q> c_0 ... c_{q-1}` with every rational as num/den.
std::string render(const WeightValue& x);
WeightValue parse_weight(const WeightContext& ctx, const std::string& text);

double approx(const WeightValue& x);

}  // namespace cyclecert
