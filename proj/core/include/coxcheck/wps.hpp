#pragma once

// The weighted-projective-plane side: weight triples (a, b, c) with a
// relation a*e + b*f = c*g, the delta/gamma criterion, orientation search,
// the bridge back to a slope triangle, and the two infinite families.
//
// All weight arithmetic is in 64-bit integers; inputs above 2^31 are
// rejected so intermediate products cannot overflow.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxcheck/numbers.hpp"
#include "coxcheck/triangle.hpp"

namespace coxcheck {

// Positive weights with gcd(a, b, c) = 1; constructor validates and rejects
// (never reduces) violating triples.
struct Weights {
  std::int64_t a, b, c;
  Weights(std::int64_t a_, std::int64_t b_, std::int64_t c_);
  bool operator==(const Weights&) const = default;
};

// Positive relation coefficients with gcd(e, f, g) = 1.  The coupling
// identity a*e + b*f = c*g is validated where weights are in scope.
struct Relation {
  std::int64_t e, f, g;
  Relation(std::int64_t e_, std::int64_t f_, std::int64_t g_);
  bool operator==(const Relation&) const = default;
};

struct WpsReport {
  Rational w;                           // g^2 c / (a b)
  std::int64_t n = 0;                   // |delta_set|
  std::vector<std::int64_t> delta_set;  // non-positive, from 0 downward
  std::vector<std::int64_t> gamma_set;  // non-negative, ascending
  bool cond1 = false;                   // w < 1
  bool cond2_count_ok = false;          // |gamma_set| == n
  bool cond2_mod_ok = false;            // n*(b, a) not both 0 mod g
  bool passes = false;

  bool operator==(const WpsReport&) const = default;
};

// One qualifying plane: the canonical unordered triple plus the ordered
// orientation and relation that actually satisfy the criterion.
struct PlaneRecord {
  std::array<std::int64_t, 3> triple;  // sorted ascending
  Weights orientation;
  Relation relation;
  WpsReport report;
};

// All relations (e, f, g) with a*e + b*f = c*g, gcd(e, f, g) = 1 and
// g^2 c < a b (equivalently w < 1), by iterating g and solving for e, f.
std::vector<Relation> find_relations(const Weights& wts);

// Evaluates the two-part criterion for an ordered orientation.  delta_set
// collects delta <= 0 with (b + delta*e, a - delta*f) componentwise >= 0 and
// both divisible by g; gamma_set collects gamma >= 0 likewise against
// (n-1)*(b, a) + gamma*(e, -f).  Throws when the relation does not satisfy
// a*e + b*f = c*g.
WpsReport check_wps_criterion(const Weights& wts, const Relation& rel);

// Tries the distinct ordered role assignments of an unordered triple in
// lexicographic order and returns the first passing orientation, if any.
std::optional<PlaneRecord> qualifies(std::int64_t a, std::int64_t b,
                                     std::int64_t c);

// The slope triangle of a w < 1 relation: left vertex abscissa -e*g/b, right
// vertex abscissa f*g/a, slopes fixed by an integer shear to 0 <= s2 < 1.
// The auxiliary lattice vector with unit horizontal coordinate always exists
// because gcd(e, f, g) = 1; a failure to find it is reported as an error.
Triangle wps_to_triangle(const Weights& wts, const Relation& rel);

// The two infinite families: variant 1 is (7N-3, 8N-3, (5N-2)N) with
// relation (N, N, 3) for N >= 4 and 3 not dividing N; variant 2 is
// (7N-10, 8N-3, 5N^2-7N+1) with relation (N, N-1, 3) for N >= 3.
std::pair<Weights, Relation> gnw_family(std::int64_t N, int variant);

// Canonical descriptor of (orientation, relation) modulo the simultaneous
// a<->b / e<->f swap; used to compare search output against printed tables.
struct CanonicalRelation {
  std::int64_t c, g;
  std::array<std::pair<std::int64_t, std::int64_t>, 2> pairs;  // sorted
  bool operator==(const CanonicalRelation&) const = default;
  auto operator<=>(const CanonicalRelation&) const = default;
};
CanonicalRelation canonical_relation(const Weights& wts, const Relation& rel);

}  // namespace coxcheck
