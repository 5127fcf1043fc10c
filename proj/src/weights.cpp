#include "cyclecert/weights.hpp"

#include <mpfr.h>

#include <numeric>
#include <sstream>
#include <utility>

namespace cyclecert {

namespace {

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Largest g with k = a^g; returns (a, g), a not a perfect power.
std::pair<int, int> perfect_power_split(int k) {
  if (k == 1) return {1, 1};
  mpz_class kz(k);
  int max_g = static_cast<int>(mpz_sizeinbase(kz.get_mpz_t(), 2)) - 1;
  for (int g = max_g; g >= 2; --g) {
    mpz_class root;
    mpz_root(root.get_mpz_t(), kz.get_mpz_t(), g);
    if (pow_z(root, g) == kz) return {static_cast<int>(root.get_si()), g};
  }
  return {k, 1};
}

// RAII wrapper around one mpfr number.
class Real {
public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

private:
  mpfr_t v_;
};

}  // namespace

WeightContext::WeightContext(int k, int ell, int chi)
    : k_(k), ell_(ell), chi_(chi) {
  if (k < 1) throw InputError("weight context: k must be >= 1");
  if (ell < 1) throw InputError("weight context: ell must be >= 1");
  if (chi < 1) throw InputError("weight context: chi must be >= 1");
  if (k == 1) {
    a_ = 1;
    p_ = 0;
    q_ = 1;
    return;
  }
  auto [a, g] = perfect_power_split(k);
  int d = std::gcd(g, ell);
  a_ = a;
  p_ = g / d;
  q_ = ell / d;
}

WeightValue::WeightValue(const WeightContext& ctx) : ctx_(ctx) {
  coeff_.assign(ctx.root_index(), mpq_class(0));
}

WeightValue WeightValue::zero(const WeightContext& ctx) {
  return WeightValue(ctx);
}

WeightValue WeightValue::one(const WeightContext& ctx) {
  WeightValue x(ctx);
  x.coeff_[0] = 1;
  return x;
}

WeightValue WeightValue::integer(const WeightContext& ctx, const mpz_class& n) {
  WeightValue x(ctx);
  x.coeff_[0] = mpq_class(n);
  return x;
}

bool WeightValue::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

void WeightValue::require_same_context(const WeightValue& other) const {
  if (!(ctx_ == other.ctx_))
    throw InputError("weight values from different contexts");
}

WeightValue WeightValue::operator+(const WeightValue& other) const {
  require_same_context(other);
  WeightValue out(ctx_);
  for (std::size_t r = 0; r < coeff_.size(); ++r)
    out.coeff_[r] = coeff_[r] + other.coeff_[r];
  return out;
}

WeightValue WeightValue::operator-(const WeightValue& other) const {
  require_same_context(other);
  WeightValue out(ctx_);
  for (std::size_t r = 0; r < coeff_.size(); ++r)
    out.coeff_[r] = coeff_[r] - other.coeff_[r];
  return out;
}

WeightValue WeightValue::scaled(const mpq_class& factor) const {
  mpq_class f = factor;
  f.canonicalize();
  WeightValue out(ctx_);
  for (std::size_t r = 0; r < coeff_.size(); ++r)
    out.coeff_[r] = coeff_[r] * f;
  return out;
}

WeightValue vertex_weight(const WeightContext& ctx, int colour_degree) {
  if (colour_degree < 0 || colour_degree > ctx.k())
    throw InputError("vertex weight: colour degree " +
                     std::to_string(colour_degree) +
                     " outside [0, k=" + std::to_string(ctx.k()) + "]");
  // chi^{-d} * k^{-d/ell} = chi^{-d} * a^{-m} * beta^r with d*p = m*q + r.
  const int q = ctx.root_index();
  long e = static_cast<long>(colour_degree) * ctx.root_power();
  long m = e / q;
  int r = static_cast<int>(e % q);
  mpz_class den = pow_z(ctx.chi(), colour_degree) *
                  pow_z(ctx.radical_base(), static_cast<unsigned long>(m));
  mpq_class coeff(mpz_class(1), den);
  coeff.canonicalize();
  WeightValue w = WeightValue::zero(ctx);
  w.coeff_[r] = coeff;
  return w;
}

WeightValue mul_root_k(const WeightValue& x) {
  const WeightContext& ctx = x.context();
  const int q = ctx.root_index();
  const int p = ctx.root_power();
  const mpz_class a(ctx.radical_base());
  WeightValue out = WeightValue::zero(ctx);
  for (int r = 0; r < q; ++r) {
    if (x.coeff_[r] == 0) continue;
    // c_r * beta^r * a^{p/q} = c_r * a^{(p-r)/q} = c_r * a^m * beta^{r'}
    // with m = ceil((p-r)/q) and r' = m*q - (p-r).
    int e = p - r;
    int m = (e >= 0) ? (e + q - 1) / q : -((-e) / q);
    int rp = m * q - e;
    mpq_class factor;
    if (m >= 0)
      factor = mpq_class(pow_z(a, static_cast<unsigned long>(m)));
    else
      factor = mpq_class(mpz_class(1), pow_z(a, static_cast<unsigned long>(-m)));
    factor.canonicalize();
    out.coeff_[rp] += x.coeff_[r] * factor;
  }
  return out;
}

WeightValue scale_by_alpha(const WeightValue& x) {
  return mul_root_k(x).scaled(mpq_class(x.context().chi()));
}

WeightValue mul_threshold(const WeightValue& x) { return mul_root_k(x) - x; }

WeightValue layer_threshold(const WeightContext& ctx) {
  return mul_threshold(WeightValue::one(ctx));
}

namespace {

// Directed-rounding interval for sum_r coeff[r] * beta^r at `bits`
// precision; lo and hi must be initialized to that precision.
void eval_interval(const WeightValue& x, mpfr_ptr lo, mpfr_ptr hi) {
  const WeightContext& ctx = x.context();
  const int q = ctx.root_index();
  const mpfr_prec_t prec = mpfr_get_prec(lo);

  // t = a^{1/q} >= 1, bounded both ways.
  Real tlo(prec), thi(prec);
  mpfr_set_si(tlo.get(), ctx.radical_base(), MPFR_RNDD);
  mpfr_set_si(thi.get(), ctx.radical_base(), MPFR_RNDU);
  mpfr_rootn_ui(tlo.get(), tlo.get(), static_cast<unsigned long>(q), MPFR_RNDD);
  mpfr_rootn_ui(thi.get(), thi.get(), static_cast<unsigned long>(q), MPFR_RNDU);

  // Running bounds for t^r (positive, so lower*lower / upper*upper chains
  // stay valid), inverted per term to bound beta^r = t^{-r}.
  Real plo(prec), phi(prec);
  mpfr_set_si(plo.get(), 1, MPFR_RNDD);
  mpfr_set_si(phi.get(), 1, MPFR_RNDU);

  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);

  Real blo(prec), bhi(prec), term(prec);
  for (int r = 0; r < q; ++r) {
    if (r > 0) {
      mpfr_mul(plo.get(), plo.get(), tlo.get(), MPFR_RNDD);
      mpfr_mul(phi.get(), phi.get(), thi.get(), MPFR_RNDU);
    }
    const mpq_class& c = x.coefficient(r);
    if (c == 0) continue;
    // beta^r bounds: 1/t^r.
    mpfr_si_div(blo.get(), 1, phi.get(), MPFR_RNDD);
    mpfr_si_div(bhi.get(), 1, plo.get(), MPFR_RNDU);
    const bool nonneg = c >= 0;
    mpfr_mul_q(term.get(), nonneg ? blo.get() : bhi.get(), c.get_mpq_t(),
               MPFR_RNDD);
    mpfr_add(lo, lo, term.get(), MPFR_RNDD);
    mpfr_mul_q(term.get(), nonneg ? bhi.get() : blo.get(), c.get_mpq_t(),
               MPFR_RNDU);
    mpfr_add(hi, hi, term.get(), MPFR_RNDU);
  }
}

int interval_sign(const WeightValue& x, int bits) {
  Real lo(bits), hi(bits);
  eval_interval(x, lo.get(), hi.get());
  if (mpfr_sgn(lo.get()) > 0) return 1;
  if (mpfr_sgn(hi.get()) < 0) return -1;
  return 0;
}

}  // namespace

Ordering compare(const WeightValue& x, const WeightValue& y) {
  x.require_same_context(y);
  WeightValue diff = x - y;
  if (diff.is_zero()) return Ordering::Equal;
  if (x.context().root_index() == 1) {
    return diff.coeff_[0] > 0 ? Ordering::Greater : Ordering::Less;
  }
  // Nonzero coefficient vector means nonzero value (the basis is linearly
  // independent over the rationals), so refinement terminates.
  for (int bits = 96; bits <= (1 << 22); bits *= 2) {
    int s = interval_sign(diff, bits);
    if (s > 0) return Ordering::Greater;
    if (s < 0) return Ordering::Less;
  }
  throw std::logic_error(
      "weight compare: interval refinement failed to separate a provably "
      "nonzero value");
}

Ordering compare_numeric(const WeightValue& x, const WeightValue& y,
                         int bits) {
  x.require_same_context(y);
  int s = interval_sign(x - y, bits);
  if (s > 0) return Ordering::Greater;
  if (s < 0) return Ordering::Less;
  return Ordering::Equal;
}

mpz_class ceil_of(const WeightValue& x) {
  const WeightContext& ctx = x.context();
  if (compare(x, WeightValue::zero(ctx)) == Ordering::Less)
    throw InputError("ceil_of requires a non-negative value");
  if (ctx.root_index() == 1) {
    const mpq_class& c = x.coefficient(0);
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return out;
  }
  // Shrink the interval below width one, then settle the boundary with
  // exact comparisons.
  mpz_class cand;
  for (int bits = 96;; bits *= 2) {
    Real lo(bits), hi(bits), width(bits);
    eval_interval(x, lo.get(), hi.get());
    mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(width.get(), 1) < 0) {
      mpfr_get_z(cand.get_mpz_t(), hi.get(), MPFR_RNDU);
      break;
    }
    if (bits > (1 << 22))
      throw std::logic_error("ceil_of: interval refinement stalled");
  }
  while (cand > 0 &&
         compare(WeightValue::integer(ctx, cand - 1), x) != Ordering::Less)
    --cand;
  return cand;
}

std::string render(const WeightValue& x) {
  std::ostringstream out;
  out << "poly " << x.context().root_index();
  for (const auto& c : x.coeff_)
    out << " " << c.get_num() << "/" << c.get_den();
  return out.str();
}

WeightValue parse_weight(const WeightContext& ctx, const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  int q = 0;
  if (!(in >> magic >> q) || magic != "poly")
    throw InputError("weight: expected `poly <q> ...`");
  if (q != ctx.root_index())
    throw InputError("weight: basis size " + std::to_string(q) +
                     " does not match context (expected " +
                     std::to_string(ctx.root_index()) + ")");
  WeightValue x = WeightValue::zero(ctx);
  for (int r = 0; r < q; ++r) {
    std::string tok;
    if (!(in >> tok)) throw InputError("weight: truncated coefficient list");
    mpq_class c;
    if (mpq_set_str(c.get_mpq_t(), tok.c_str(), 10) != 0 || c.get_den() == 0)
      throw InputError("weight: bad rational `" + tok + "`");
    c.canonicalize();
    x.coeff_[r] = c;
  }
  std::string rest;
  if (in >> rest) throw InputError("weight: trailing data");
  return x;
}

double approx(const WeightValue& x) {
  Real lo(64), hi(64);
  eval_interval(x, lo.get(), hi.get());
  Real mid(64);
  mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_ui(mid.get(), mid.get(), 2, MPFR_RNDN);
  return mpfr_get_d(mid.get(), MPFR_RNDN);
}

}  // namespace cyclecert
