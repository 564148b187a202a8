#pragma once

// Lattice configurations inside the fan whose rays are the nonzero 0/1
// vectors of Z^{n-3} and their negatives.  A configuration consists of a
// rank-(n-5) sublattice spanned by rays, three distinguished rays u, v, w and
// positive weights (a, b, c); the checker decides saturation, quotient
// generation and the weight relation a*u + b*v + c*w = 0 modulo the
// sublattice.  The built-in n = 13 witness carries explicit data whose
// identities are re-verified rather than assumed.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coxcheck/matrix.hpp"
#include "coxcheck/numbers.hpp"

namespace coxcheck {

// True iff every entry lies in {0, 1} or every entry lies in {0, -1}, with
// at least one nonzero entry.
bool is_ray_vector(const std::vector<BigInt>& v);

// All nonzero 0/1 vectors of Z^{n-3} followed by their negatives; the count
// is 2 * (2^{n-3} - 1).  Throws std::invalid_argument when n < 5 and
// std::overflow_error when the enumeration would be astronomically large.
std::vector<std::vector<BigInt>> sigma_rays(std::int64_t n);

struct Configuration {
  std::int64_t n = 0;                      // >= 7
  std::vector<std::vector<BigInt>> basis;  // n-5 vectors in Z^{n-3}
  std::vector<BigInt> u, v, w;
  std::array<BigInt, 3> weights{};         // (a, b, c): positive, gcd 1
};

struct ConfigReport {
  bool basis_are_rays = false;
  bool rank_ok = false;             // basis matrix has rank n-5 over Q
  bool saturated = false;           // all SNF invariant factors equal 1
  bool quotient_generated = false;  // [basis | u v w] spans Z^{n-3}
  bool relation_holds = false;      // a*u+b*v+c*w lies in the integer span
  bool passes = false;
  std::vector<BigInt> invariant_factors;  // of the basis matrix

  bool operator==(const ConfigReport&) const = default;
};

// Runs the five checks.  Throws std::invalid_argument on inconsistent
// dimensions, non-positive or non-coprime weights, or n < 7.
ConfigReport check_configuration(const Configuration& cfg);

// The explicit n = 13 witness: basis a_1..a_8, u = e_1, v = e_2,
// w = e_3+e_5+e_6, weights (26, 15, 7).
Configuration builtin_example_13();

struct BuiltinReport {
  ConfigReport config;
  bool w_combination_ok = false;   // -4u-2v+2a1+a2+a3-a8+a10 = e3+e5+e6
  bool determinant_ok = false;     // det[a1..a10] = 1
  bool identity_ok = false;        // 26u+15v+7w = 11a1+8a2+4a3+a4+a5+a6-a7-3a8
  bool coefficients_ok = false;    // the combination solved from scratch
  bool rays_count_ok = false;      // 2046 rays at n = 13
  bool passes = false;

  // Coefficients of 26u+15v+7w in the basis, as recovered by the solver.
  std::vector<BigInt> combination;
};

// Checks the built-in configuration and re-derives its displayed identities.
BuiltinReport verify_builtin();

// Parses a configuration from JSON text with fields n, basis (list of
// integer lists), u, v, w, weights ([a, b, c]).  Throws
// std::invalid_argument on malformed input.
Configuration configuration_from_json(const std::string& text);

// Serializes in the same schema.
std::string configuration_to_json(const Configuration& cfg);

std::string config_report_to_json(const ConfigReport& report);

}  // namespace coxcheck
