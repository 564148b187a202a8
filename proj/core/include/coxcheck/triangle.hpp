#pragma once

// The rational triangle with vertices at the origin, (x1, y1) and (x2, y2),
// determined by three slopes s1 < s2 < s3: the two lower edges y = s1*x and
// y = s3*x meet the top edge y = s2*x + 1 at the outer vertices, and (0, 1)
// lies in the interior of the top edge.  This module houses the triangle
// criterion, the transforms that preserve it, lattice-point enumeration of
// integer multiples, and the normal fan with its weights.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxcheck/numbers.hpp"

namespace coxcheck {

struct Triangle {
  Rational s1, s2, s3;

  // Vertex coordinates derived from the slopes.
  Rational x1() const { return Rational(1) / (s1 - s2); }
  Rational y1() const { return s1 * x1(); }
  Rational x2() const { return Rational(1) / (s3 - s2); }
  Rational y2() const { return s3 * x2(); }

  bool operator==(const Triangle&) const = default;
};

// Validates s1 < s2 < s3; throws std::invalid_argument otherwise.
Triangle triangle_from_slopes(const Rational& s1, const Rational& s2,
                              const Rational& s3);

// Width x2 - x1 = 1/(s2-s1) + 1/(s3-s2).
Rational width(const Triangle& t);

// Shear (x, y) -> (x, y + a*x): adds the integer a to every slope.
Triangle shear(const Triangle& t, const BigInt& a);

// Reflection across the y-axis: slopes become (-s3, -s2, -s1).
Triangle reflect(const Triangle& t);

struct TriangleReport {
  Rational w;
  BigInt n;                       // |[s1, s2] ∩ ℤ|
  bool cond1 = false;             // w < 1
  BigInt cond2_count;             // |(n-1)·[s2, s3] ∩ ℤ|, as a set image
  bool cond2_count_ok = false;    // cond2_count == n
  bool cond2_nonintegral_ok = false;  // n·s2 not an integer
  bool passes = false;

  bool operator==(const TriangleReport&) const = default;
};

// Evaluates the two-part criterion on the slopes.  For n = 0 the scaling by
// n-1 = -1 reverses the interval; the count is taken over the set image
// (endpoints swapped), though such triangles fail condition (1) regardless.
TriangleReport check_triangle_criterion(const Triangle& t);

// Least m >= 1 making m*x1, m*y1, m*x2, m*y2 and m*w all integral.
BigInt minimal_multiple(const Triangle& t);

struct LatticeSample {
  BigInt m;
  BigInt W;  // m * width
  // All integer points of the dilated triangle, sorted lexicographically.
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
};

// Enumerates the integer points of m times the triangle, column by column.
// Throws std::invalid_argument when m*vertices or m*w are non-integral and
// std::overflow_error when coordinates would not fit in 64 bits.
LatticeSample lattice_points(const Triangle& t, const BigInt& m);

// Number of sample points with first coordinate x.
std::size_t column_count(const LatticeSample& sample, std::int64_t x);

struct NormalFan {
  // Primitive inward normals of the edges with slopes s1, s2, s3, in order.
  std::array<std::pair<BigInt, BigInt>, 3> rays;
  // Positive weights with gcd 1 satisfying a*v1 + b*v2 + c*v3 = 0.
  std::array<BigInt, 3> weights;
  // Index in ℤ² of the sublattice generated by the three rays.
  BigInt index;
};

NormalFan normal_fan_rays(const Triangle& t);

// JSON object {"s1","s2","s3","x1","y1","x2","y2","w","n","cond1",
// "cond2_count","cond2_count_ok","cond2_nonintegral_ok","passes"}; rationals
// rendered as "p/q" strings, counts as numbers (decimal strings past 64 bits).
std::string triangle_report_to_json(const Triangle& t,
                                    const TriangleReport& report);

// JSON object {"rays":[[x,y],...],"weights":[a,b,c],"index":k}.
std::string normal_fan_to_json(const NormalFan& fan);

}  // namespace coxcheck
