#include "symchar/reg_sing.hpp"

#include <optional>
#include <string>

#include "symchar/basic_sets.hpp"
#include "symchar/linalg.hpp"

namespace symchar {

RegSingTables regular_singular_tables(const CharTable& table, int ell) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  RegSingTables t;
  t.n = table.n;
  t.ell = ell;
  for (std::size_t i = 0; i < table.size(); ++i) {
    (is_ell_regular(table.labels[i], ell) ? t.reg_rows : t.sing_rows).push_back(i);
    (is_ell_class_regular(table.labels[i], ell) ? t.creg_cols : t.csing_cols).push_back(i);
  }
  if (t.reg_rows.size() != t.creg_cols.size()) {
    throw std::logic_error("regular and class-regular counts differ for n = " + std::to_string(table.n));
  }
  std::vector<std::size_t> all(table.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  t.x_reg = table.values.select(t.reg_rows, t.creg_cols);
  t.x_sing = table.values.select(t.sing_rows, t.csing_cols);
  t.xbar_reg = table.values.select(all, t.creg_cols);
  t.xbar_sing = table.values.select(all, t.csing_cols);
  return t;
}

PowerDecomposition power_of(const Integer& x, long ell) {
  if (x <= 0) throw std::invalid_argument("power_of needs a positive integer");
  PowerDecomposition out;
  Integer rest = x;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(ell)) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(ell));
    ++out.exponent;
  }
  out.exact = rest == 1;
  return out;
}

namespace {

// True iff every prime factor of x divides ell.
bool supported_on_primes_of(Integer x, long ell) {
  for (long q = 2; q <= ell; ++q) {
    if (ell % q != 0 || !is_prime(q)) continue;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(q)) != 0) {
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
    }
  }
  return x == 1;
}

}  // namespace

Verdict verify_regular_singular(const CharTable& table, int ell) {
  const RegSingTables t = regular_singular_tables(table, ell);
  Verdict v;
  v.subject = "S_" + std::to_string(table.n) + ", ell = " + std::to_string(ell);

  Integer a_creg = 1, b_creg = 1, a_csing = 1, b_csing = 1;
  for (std::size_t j : t.creg_cols) {
    const auto st = stats(table.labels[j]);
    a_creg *= st.a;
    b_creg *= st.b;
  }
  for (std::size_t j : t.csing_cols) {
    const auto st = stats(table.labels[j]);
    a_csing *= st.a;
    b_csing *= st.b;
  }

  const Integer det_reg = det(t.x_reg);
  with(with(v.add("det_regular", abs(det_reg) == a_creg, "|det X_reg| = a^creg"), "det", to_string(det_reg)),
       "expected", to_string(a_creg));
  const Integer det_sing = det(t.x_sing);
  with(with(v.add("det_singular", abs(det_sing) == b_csing, "|det X_sing| = b^csing"), "det", to_string(det_sing)),
       "expected", to_string(b_csing));

  const auto reg = basic_set_test(t.xbar_reg, t.reg_rows);
  const auto sing = basic_set_test(t.xbar_sing, t.sing_rows);
  v.add("basic_set_regular", reg.is_basic, "regular characters form a basic set on regular classes");
  v.add("basic_set_singular", sing.is_basic, "singular characters form a basic set on singular classes");

  Rational quotient(b_creg, a_creg);
  quotient.canonicalize();
  Check& cd = v.add("cartan_det", false, "det C_reg = b^creg/a^creg = a^csing/b^csing = det C_sing");
  with(cd, "predicted", to_string(quotient));
  std::optional<Integer> c_reg;
  if (reg.is_basic && sing.is_basic) {
    c_reg = det(cartan_matrix(reg));
    const Integer c_sing = det(cartan_matrix(sing));
    const bool ok = *c_reg == c_sing && *c_reg * a_creg == b_creg && c_sing * b_csing == a_csing;
    cd.status = ok ? Status::Pass : Status::Fail;
    with(cd, "det_regular", to_string(*c_reg));
    with(cd, "det_singular", to_string(c_sing));
  } else {
    with(cd, "reason", "basic set test failed");
  }

  const bool integral = quotient.get_den() == 1 && quotient > 0;
  Check& support = v.add("quotient_prime_support", integral && supported_on_primes_of(quotient.get_num(), ell),
                         "b^creg/a^creg is an integer with no prime factor outside ell");
  with(support, "quotient", to_string(quotient));

  Check& power = v.add("quotient_power_of_ell", false, "det C_reg is a power of ell");
  if (integral && c_reg && *c_reg == quotient.get_num()) {
    const auto pw = power_of(*c_reg, ell);
    power.status = pw.exact ? Status::Pass : Status::Fail;
    with(power, "exponent", std::to_string(pw.exponent));
  }
  with(power, "value", c_reg ? to_string(*c_reg) : to_string(quotient));
  return v;
}

}  // namespace symchar
