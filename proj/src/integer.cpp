#include "symchar/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace symchar {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)), 10);
  if (text[0] == '-') value = -value;
  return value;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

int valuation(const Integer& x, unsigned long p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must be >= 2");
  Integer rest;
  const Integer base = p;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace symchar
