#include "nullcert/rational.hpp"

#include <cctype>

namespace nullcert {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ContractError("rational denominator must be nonzero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(num), Integer(den));
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = (slash == std::string::npos) ? text : text.substr(0, slash);
  const std::string den_part = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_plain_integer(num_part) || !is_plain_integer(den_part)) {
    throw ParseError("malformed rational '" + text + "' (expected p or p/q, base 10)");
  }
  Integer num(num_part, 10);
  Integer den(den_part, 10);
  if (den <= 0) throw ParseError("rational '" + text + "' must have a positive denominator");
  return make_rational(num, den);
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Rational floor_rational(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rational(q);
}

Rational ceil_rational(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rational(q);
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw ContractError("integer out of 64-bit range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::int64_t rational_to_int64(const Rational& r) {
  if (!is_integral(r)) throw ContractError("expected an integer, got " + rational_to_string(r));
  return to_int64(r.get_num());
}

}  // namespace nullcert
