#include "orbitlift/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace orbitlift {

Rational Rational::parse(std::string_view text) {
  // trim
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("Rational::parse: invalid character in '" + s + "'");
  }
  try {
    mpq_class v(s, 10);
    v.canonicalize();
    return Rational(std::move(v));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: cannot parse '" + s + "'");
  }
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num_mpz_t()) && mpz_perfect_square_p(v_.get_den_mpz_t());
}

Rational Rational::sqrt_exact() const {
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::string Rational::decimal(int sig_digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig_digits, to_double());
  return buf;
}

Rational pow(const Rational& base, unsigned e) {
  Rational acc(1), b = base;
  while (e) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.raw(); }

}  // namespace orbitlift
