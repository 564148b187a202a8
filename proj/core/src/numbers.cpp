#include "coxcheck/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace coxcheck {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt floor_rat(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

BigInt ceil_rat(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

bool is_integer(const Rational& q) {
  // Divisibility rather than den == 1, so unreduced values (possible via
  // direct two-argument construction) are still classified correctly.
  return mpz_divisible_p(mpq_numref(q.get_mpq_t()),
                         mpq_denref(q.get_mpq_t())) != 0;
}

BigInt integers_in_closed_interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) {
    throw std::invalid_argument("integers_in_closed_interval: lo > hi");
  }
  BigInt count = floor_rat(hi) - ceil_rat(lo) + 1;
  if (count < 0) count = 0;
  return count;
}

std::vector<BigInt> integers_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("integers_in: lo > hi");
  std::vector<BigInt> out;
  BigInt first = ceil_rat(lo);
  BigInt last = floor_rat(hi);
  BigInt count = last - first + 1;
  if (count <= 0) return out;
  if (count > 1000000) {
    throw std::length_error("integers_in: interval contains too many integers to list");
  }
  out.reserve(count.get_ui());
  for (BigInt n = first; n <= last; ++n) out.push_back(n);
  return out;
}

Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational prod = 1;
  Rational factor = x;
  for (unsigned long i = 0; i < k; ++i) {
    prod *= factor;
    factor -= 1;
  }
  return prod;
}

BigInt falling_factorial(const BigInt& x, unsigned long k) {
  BigInt prod = 1;
  BigInt factor = x;
  for (unsigned long i = 0; i < k; ++i) {
    prod *= factor;
    factor -= 1;
  }
  return prod;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

std::string rational_to_string(const Rational& q) {
  // Canonicalize a copy first so unreduced values print in lowest terms.
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  std::string num_s = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den_s = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  auto num = parse_bigint(num_s);
  auto den = parse_bigint(den_s);
  if (!num || !den || *den == 0) return std::nullopt;
  Rational q(*num, *den);
  q.canonicalize();
  return q;
}

std::optional<BigInt> parse_bigint(const std::string& text) {
  if (!is_decimal(text)) return std::nullopt;
  bool neg = text[0] == '-';
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  BigInt v(text.substr(start), 10);
  if (neg) v = -v;
  return v;
}

bool fits_i64(const BigInt& v) {
  static const BigInt lo = BigInt("-9223372036854775808");
  static const BigInt hi = BigInt("9223372036854775807");
  return v >= lo && v <= hi;
}

std::int64_t to_i64(const BigInt& v) {
  if (!fits_i64(v)) throw std::overflow_error("to_i64: value does not fit in 64 bits");
  // mpz_get_si truncates to long; on LP64 this is exactly int64.
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

}  // namespace coxcheck
