#include "hodgespec/rational.hpp"

#include <cctype>

#include "hodgespec/error.hpp"

namespace hodgespec {

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt(const Integer& v) {
  if (v < 0) fail(ErrorKind::InvalidArgument, "isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::uint64_t binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return to_u64(r);
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    fail(ErrorKind::InvalidArgument, "integer does not fit in 64 bits: " + v.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace hodgespec
