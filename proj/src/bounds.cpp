#include "cyclecert/bounds.hpp"

#include <sstream>

#include "cyclecert/weights.hpp"

namespace cyclecert {

mpz_class ceil_power_bound(const mpz_class& base, int k, int ell) {
  if (k < 1) throw InputError("bounds: k must be >= 1");
  if (ell < 1) throw InputError("bounds: ell must be >= 1");
  if (base < 1) throw InputError("bounds: base must be >= 1");
  WeightContext ctx(k, ell, 1);
  WeightValue value = WeightValue::one(ctx);
  for (int j = 0; j < k; ++j) value = mul_root_k(value);
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned>(k));
  return ceil_of(value.scaled(mpq_class(scale)));
}

long theorem2_cycle_length(const mpq_class& b, int k) {
  if (k < 1) throw InputError("bounds: k must be >= 1");
  if (b <= 2) throw InputError("bounds: b must be > 2");
  mpq_class half = b / 2;
  mpq_class power(1);
  long t = 0;
  while (power < k) {
    power *= half;
    ++t;
  }
  return 2 * t + 1;
}

BoundReport compute_bounds(int k, int ell, const std::optional<mpq_class>& b,
                           const std::optional<int>& chi) {
  if (k < 1) throw InputError("bounds: k must be >= 1");
  if (ell < 1) throw InputError("bounds: ell must be >= 1");
  if (chi && *chi < 1) throw InputError("bounds: chi must be >= 1");

  BoundReport report;
  report.k = k;
  report.ell = ell;
  report.b = b;
  report.chi = chi;
  report.theorem1_upper = ceil_power_bound(mpz_class(4 * ell - 2), k, ell) + 1;
  if (b) report.theorem2_length = theorem2_cycle_length(*b, k);
  if (chi) report.lemma_bound = ceil_power_bound(mpz_class(*chi), k, ell);
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned>(k));
  report.lower_bound = ell * two_k + 1;
  return report;
}

namespace {

std::string rational_text(const mpq_class& q) {
  std::ostringstream out;
  out << q.get_num();
  if (q.get_den() != 1) out << "/" << q.get_den();
  return out.str();
}

}  // namespace

std::string report_keyvalues(const BoundReport& report) {
  std::ostringstream out;
  out << "k=" << report.k << "\n";
  out << "l=" << report.ell << "\n";
  if (report.b) out << "b=" << rational_text(*report.b) << "\n";
  if (report.chi) out << "chi=" << *report.chi << "\n";
  out << "theorem1_upper=" << report.theorem1_upper << "\n";
  if (report.theorem2_length)
    out << "theorem2_length=" << *report.theorem2_length << "\n";
  if (report.lemma_bound) out << "lemma_bound=" << *report.lemma_bound << "\n";
  out << "lower_bound=" << report.lower_bound << "\n";
  return out.str();
}

std::string report_pretty(const BoundReport& report) {
  std::ostringstream out;
  out << "parameters        k=" << report.k << " l=" << report.ell;
  if (report.b) out << " b=" << rational_text(*report.b);
  if (report.chi) out << " chi=" << *report.chi;
  out << "\n";
  out << "theorem 1 bound   every " << report.k
      << "-local colouring on more than " << (report.theorem1_upper - 1)
      << " vertices has an odd cycle of length " << (2 * report.ell + 1)
      << " in one colour\n";
  if (report.theorem2_length)
    out << "theorem 2 bound   above b^k vertices some colour has an odd "
           "cycle of length at most "
        << *report.theorem2_length << "\n";
  if (report.lemma_bound)
    out << "deletion lemma    completion certifies at most "
        << *report.lemma_bound << " vertices\n";
  out << "lower bound       a " << report.k << "-local colouring of "
      << (report.lower_bound - 1) << " vertices avoids odd cycles up to length "
      << (2 * report.ell + 1) << "\n";
  return out.str();
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational");
  if (text.find_first_of(" \t\r\n") != std::string::npos)
    throw InputError("bad rational `" + text + "`");
  std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t places = text.size() - dot - 1;
    mpz_class num;
    if (digits.empty() || places == 0 ||
        mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw InputError("bad rational `" + text + "`");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
  }
  mpq_class out;
  if (mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0 ||
      out.get_den() == 0)
    throw InputError("bad rational `" + text + "`");
  out.canonicalize();
  return out;
}

}  // namespace cyclecert
