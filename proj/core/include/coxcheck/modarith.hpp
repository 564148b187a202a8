#pragma once

// Fixed-width modular arithmetic for the randomized rank computations: a
// Montgomery-form field F_p for odd p < 2^63, a deterministic Miller-Rabin
// test for 64-bit inputs, and a uniform prime sampler.  Header-only so the
// elimination inner loops inline.

#include <cstdint>
#include <random>
#include <stdexcept>

namespace coxcheck {

// Montgomery representation modulo an odd n < 2^63.  Values are stored
// premultiplied by 2^64 mod n; mul() performs a REDC after the wide product.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t n) : n_(n) {
    if (n < 3 || n % 2 == 0 || (n >> 63) != 0) {
      throw std::invalid_argument("Montgomery: modulus must be odd, 3 <= n < 2^63");
    }
    // Newton iteration: inv = n^{-1} mod 2^64 (five steps double the precision).
    std::uint64_t inv = n;
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    std::uint64_t r1 = (~n + 1) % n;  // 2^64 mod n
    r2_ = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(r1) * r1 % n);
    one_ = r1;
  }

  std::uint64_t modulus() const { return n_; }

  // Montgomery form of 1.
  std::uint64_t one() const { return one_; }

  std::uint64_t to_mont(std::uint64_t a) const { return mul(a % n_, r2_); }

  std::uint64_t from_mont(std::uint64_t a) const { return reduce(a); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= n_) s -= n_;
    return s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + n_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : n_ - a; }

  std::uint64_t pow(std::uint64_t base_mont, std::uint64_t exp) const {
    std::uint64_t acc = one_;
    std::uint64_t b = base_mont;
    while (exp != 0) {
      if (exp & 1) acc = mul(acc, b);
      b = mul(b, b);
      exp >>= 1;
    }
    return acc;
  }

  // Inverse in Montgomery form via Fermat (n must be prime).
  std::uint64_t inv(std::uint64_t a_mont) const { return pow(a_mont, n_ - 2); }

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    unsigned __int128 sum = t + static_cast<unsigned __int128>(m) * n_;
    std::uint64_t r = static_cast<std::uint64_t>(sum >> 64);
    if (r >= n_) r -= n_;
    return r;
  }

  std::uint64_t n_;
  std::uint64_t neg_inv_;
  std::uint64_t r2_;
  std::uint64_t one_;
};

// Deterministic Miller-Rabin for 64-bit inputs: the witness set
// {2,3,5,7,11,13,17,19,23,29,31,37} decides primality for every n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  Montgomery mont(n);
  std::uint64_t n1 = mont.sub(0, mont.one());  // n-1 in Montgomery form
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mont.pow(mont.to_mont(a), d);
    if (x == mont.one() || x == n1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mont.mul(x, x);
      if (x == n1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// A prime drawn uniformly from the primes in [2^50, 2^62): candidates are
// sampled uniformly and rejected until one passes Miller-Rabin.
inline std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 50,
                                                    (1ULL << 62) - 1);
  for (;;) {
    std::uint64_t c = dist(rng) | 1;
    if (is_prime_u64(c)) return c;
  }
}

// Default seed for every randomized routine in the library, so repeated runs
// of the same command produce bit-identical output unless a seed is supplied.
inline constexpr std::uint64_t kDefaultSeed = 0x0ddba11c0ffee5ULL;

}  // namespace coxcheck
