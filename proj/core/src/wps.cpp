#include "coxcheck/wps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxcheck {

namespace {

constexpr std::int64_t kMaxWeight = std::int64_t(1) << 31;

void require_range(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
  if (v > kMaxWeight) {
    throw std::overflow_error(std::string(what) + " exceeds the 2^31 bound");
  }
}

}  // namespace

Weights::Weights(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_) {
  require_range(a, "weight a");
  require_range(b, "weight b");
  require_range(c, "weight c");
  if (gcd_i64(gcd_i64(a, b), c) != 1) {
    throw std::invalid_argument("weights must have gcd(a, b, c) = 1");
  }
}

Relation::Relation(std::int64_t e_, std::int64_t f_, std::int64_t g_)
    : e(e_), f(f_), g(g_) {
  require_range(e, "relation e");
  require_range(f, "relation f");
  require_range(g, "relation g");
  if (gcd_i64(gcd_i64(e, f), g) != 1) {
    throw std::invalid_argument("relation must have gcd(e, f, g) = 1");
  }
}

std::vector<Relation> find_relations(const Weights& wts) {
  const std::int64_t a = wts.a, b = wts.b, c = wts.c;
  std::vector<Relation> out;
  auto below_width_bound = [&](std::int64_t g) {
    return static_cast<__int128>(g) * g * c < static_cast<__int128>(a) * b;
  };
  for (std::int64_t g = 1; below_width_bound(g); ++g) {
    for (std::int64_t e = 1; a * e < c * g; ++e) {
      std::int64_t r = c * g - a * e;
      if (r % b != 0) continue;
      std::int64_t f = r / b;
      if (f < 1) continue;
      if (gcd_i64(gcd_i64(e, f), g) == 1) out.push_back(Relation(e, f, g));
    }
  }
  return out;
}

WpsReport check_wps_criterion(const Weights& wts, const Relation& rel) {
  const std::int64_t a = wts.a, b = wts.b, c = wts.c;
  const std::int64_t e = rel.e, f = rel.f, g = rel.g;
  if (static_cast<__int128>(a) * e + static_cast<__int128>(b) * f !=
      static_cast<__int128>(c) * g) {
    throw std::invalid_argument(
        "check_wps_criterion: relation does not satisfy a*e + b*f = c*g");
  }
  WpsReport rep;
  rep.w = make_rational(BigInt(g) * g * c, BigInt(a) * b);
  rep.w.canonicalize();
  rep.cond1 = rep.w < 1;
  for (std::int64_t d = 0; b + d * e >= 0; --d) {
    if ((b + d * e) % g == 0 && (a - d * f) % g == 0) {
      rep.delta_set.push_back(d);
    }
  }
  std::int64_t n = static_cast<std::int64_t>(rep.delta_set.size());
  rep.n = n;
  for (std::int64_t gm = 0; (n - 1) * a - gm * f >= 0; ++gm) {
    if ((n - 1) * b + gm * e < 0) continue;
    if (((n - 1) * b + gm * e) % g == 0 && ((n - 1) * a - gm * f) % g == 0) {
      rep.gamma_set.push_back(gm);
    }
  }
  rep.cond2_count_ok =
      static_cast<std::int64_t>(rep.gamma_set.size()) == n;
  rep.cond2_mod_ok = !((n * b) % g == 0 && (n * a) % g == 0);
  rep.passes = rep.cond1 && rep.cond2_count_ok && rep.cond2_mod_ok;
  return rep;
}

std::optional<PlaneRecord> qualifies(std::int64_t a, std::int64_t b,
                                     std::int64_t c) {
  std::array<std::int64_t, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (gcd_i64(gcd_i64(v[0], v[1]), v[2]) != 1) {
    throw std::invalid_argument("qualifies: triple must have gcd 1");
  }
  std::set<std::array<std::int64_t, 3>> perms;
  std::array<std::int64_t, 3> p = v;
  do {
    perms.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const auto& ordered : perms) {
    Weights wts(ordered[0], ordered[1], ordered[2]);
    for (const Relation& rel : find_relations(wts)) {
      WpsReport rep = check_wps_criterion(wts, rel);
      if (rep.passes) {
        return PlaneRecord{v, wts, rel, std::move(rep)};
      }
    }
  }
  return std::nullopt;
}

Triangle wps_to_triangle(const Weights& wts, const Relation& rel) {
  const std::int64_t a = wts.a, b = wts.b, c = wts.c;
  const std::int64_t e = rel.e, f = rel.f, g = rel.g;
  if (static_cast<__int128>(a) * e + static_cast<__int128>(b) * f !=
      static_cast<__int128>(c) * g) {
    throw std::invalid_argument(
        "wps_to_triangle: relation does not satisfy a*e + b*f = c*g");
  }
  if (!(BigInt(g) * g * c < BigInt(a) * b)) {
    throw std::invalid_argument("wps_to_triangle: relation must have w < 1");
  }
  // The triangle lives in the plane of lattice points with degree c*g; its
  // vertical unit is (e, f, -g) and the horizontal coordinate of a kernel
  // vector (u1, u2, u3) is (f*u1 - e*u2)/c.  A kernel vector with horizontal
  // coordinate 1 exists iff alpha*f - beta*e + gamma*g = 1 is solvable,
  // i.e. always, since gcd(e, f, g) = 1.
  BigInt X, Y;
  BigInt d1 = ext_gcd(BigInt(e), BigInt(f), X, Y);  // e*X + f*Y = d1
  BigInt Z, Wc;
  BigInt d2 = ext_gcd(d1, BigInt(g), Z, Wc);  // d1*Z + g*Wc = d2
  if (d2 != 1) {
    throw std::invalid_argument(
        "wps_to_triangle: no lattice vector with unit horizontal coordinate");
  }
  BigInt alpha = Y * Z, beta = -X * Z, gamma = Wc;
  // u = alpha*(c,0,-a) + beta*(0,c,-b) + gamma*(b,-a,0)
  std::array<BigInt, 3> u{alpha * c + gamma * b, beta * c - gamma * a,
                          -alpha * a - beta * b};
  if (BigInt(a) * u[0] + BigInt(b) * u[1] + BigInt(c) * u[2] != 0) {
    throw std::logic_error("wps_to_triangle: auxiliary vector left the kernel");
  }
  std::array<BigInt, 3> dvec{e, f, -g};
  std::array<BigInt, 3> base{0, 0, g};
  // The plane section of the positive octant is the triangle with vertices
  // (cg/a, 0, 0), (0, cg/b, 0), (0, 0, g); the last one is the base point.
  std::array<std::array<Rational, 3>, 2> verts{{
      {make_rational(BigInt(c) * g, BigInt(a)), Rational(0), Rational(0)},
      {Rational(0), make_rational(BigInt(c) * g, BigInt(b)), Rational(0)},
  }};
  std::array<std::pair<Rational, Rational>, 2> planar;
  for (int k = 0; k < 2; ++k) {
    std::array<Rational, 3> dx;
    for (int i = 0; i < 3; ++i) dx[i] = verts[k][i] - Rational(base[i]);
    Rational h = (Rational(BigInt(f)) * dx[0] - Rational(BigInt(e)) * dx[1]) /
                 Rational(BigInt(c));
    Rational tcoord = (dx[0] - h * Rational(u[0])) / Rational(dvec[0]);
    for (int i = 0; i < 3; ++i) {
      if (dx[i] != tcoord * Rational(dvec[i]) + h * Rational(u[i])) {
        throw std::logic_error("wps_to_triangle: affine solve inconsistent");
      }
    }
    planar[k] = {h, tcoord};
  }
  auto [h1, t1] = planar[0];
  auto [h2, t2] = planar[1];
  if (h1 > h2) {
    std::swap(h1, h2);
    std::swap(t1, t2);
  }
  if (!(h1 < 0 && 0 < h2)) {
    throw std::logic_error("wps_to_triangle: vertex abscissas not straddling 0");
  }
  Rational s1 = t1 / h1;
  Rational s3 = t2 / h2;
  Rational s2 = (t2 - t1) / (h2 - h1);
  Triangle tri = triangle_from_slopes(s1, s2, s3);
  BigInt k = -floor_rat(tri.s2);
  return shear(tri, k);
}

std::pair<Weights, Relation> gnw_family(std::int64_t N, int variant) {
  // Largest weight grows like 5*N^2; keep the products inside int64 so the
  // Weights constructor sees the true values when it applies the 2^31 bound.
  if (N > (std::int64_t{1} << 20)) {
    throw std::overflow_error("gnw_family: N exceeds the supported range");
  }
  if (variant == 1) {
    if (N < 4 || N % 3 == 0) {
      throw std::invalid_argument(
          "gnw_family variant 1 needs N >= 4 with 3 not dividing N");
    }
    return {Weights(7 * N - 3, 8 * N - 3, (5 * N - 2) * N),
            Relation(N, N, 3)};
  }
  if (variant == 2) {
    if (N < 3) {
      throw std::invalid_argument("gnw_family variant 2 needs N >= 3");
    }
    return {Weights(7 * N - 10, 8 * N - 3, 5 * N * N - 7 * N + 1),
            Relation(N, N - 1, 3)};
  }
  throw std::invalid_argument("gnw_family: variant must be 1 or 2");
}

CanonicalRelation canonical_relation(const Weights& wts, const Relation& rel) {
  CanonicalRelation canon;
  canon.c = wts.c;
  canon.g = rel.g;
  canon.pairs = {std::pair{wts.a, rel.e}, std::pair{wts.b, rel.f}};
  if (canon.pairs[1] < canon.pairs[0]) std::swap(canon.pairs[0], canon.pairs[1]);
  return canon;
}

}  // namespace coxcheck
