#include "coxcheck/triangle.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace coxcheck {

Triangle triangle_from_slopes(const Rational& s1, const Rational& s2,
                              const Rational& s3) {
  // Canonicalize defensively: callers may have built slopes with the
  // two-argument constructor, which does not reduce, and GMP comparisons
  // and arithmetic assume canonical form.
  Triangle t{s1, s2, s3};
  t.s1.canonicalize();
  t.s2.canonicalize();
  t.s3.canonicalize();
  if (!(t.s1 < t.s2 && t.s2 < t.s3)) {
    throw std::invalid_argument("triangle_from_slopes: need s1 < s2 < s3");
  }
  return t;
}

Rational width(const Triangle& t) {
  return Rational(1) / (t.s2 - t.s1) + Rational(1) / (t.s3 - t.s2);
}

Triangle shear(const Triangle& t, const BigInt& a) {
  return Triangle{t.s1 + a, t.s2 + a, t.s3 + a};
}

Triangle reflect(const Triangle& t) { return Triangle{-t.s3, -t.s2, -t.s1}; }

TriangleReport check_triangle_criterion(const Triangle& t) {
  TriangleReport r;
  r.w = width(t);
  r.n = integers_in_closed_interval(t.s1, t.s2);
  r.cond1 = r.w < 1;
  Rational scale(BigInt(r.n - 1));
  Rational a = scale * t.s2;
  Rational b = scale * t.s3;
  r.cond2_count = integers_in_closed_interval(std::min(a, b), std::max(a, b));
  r.cond2_count_ok = r.cond2_count == r.n;
  r.cond2_nonintegral_ok = !is_integer(Rational(r.n) * t.s2);
  r.passes = r.cond1 && r.cond2_count_ok && r.cond2_nonintegral_ok;
  return r;
}

BigInt minimal_multiple(const Triangle& t) {
  BigInt m = 1;
  for (const Rational& q :
       {t.x1(), t.y1(), t.x2(), t.y2(), width(t)}) {
    BigInt den = q.get_den();
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
  }
  return m;
}

namespace {

std::int64_t to_coord(const BigInt& v, const char* what) {
  if (!fits_i64(v)) {
    throw std::overflow_error(std::string("lattice_points: ") + what +
                              " exceeds 64-bit range");
  }
  return to_i64(v);
}

}  // namespace

LatticeSample lattice_points(const Triangle& t, const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("lattice_points: m must be >= 1");
  Rational mq(m);
  const std::array<Rational, 5> scaled{
      Rational(mq * t.x1()), Rational(mq * t.y1()), Rational(mq * t.x2()),
      Rational(mq * t.y2()), Rational(mq * width(t))};
  for (const Rational& q : scaled) {
    if (!is_integer(q)) {
      throw std::invalid_argument(
          "lattice_points: m does not clear the vertex/width denominators");
    }
  }
  LatticeSample out;
  out.m = m;
  out.W = floor_rat(mq * width(t));
  std::int64_t x_lo = to_coord(floor_rat(mq * t.x1()), "left vertex");
  std::int64_t x_hi = to_coord(floor_rat(mq * t.x2()), "right vertex");
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    Rational lower = (x <= 0 ? t.s1 : t.s3) * Rational(x);
    Rational upper = t.s2 * Rational(x) + mq;
    BigInt y_lo = ceil_rat(lower);
    BigInt y_hi = floor_rat(upper);
    if (y_hi < y_lo) continue;
    std::int64_t a = to_coord(y_lo, "column bottom");
    std::int64_t b = to_coord(y_hi, "column top");
    for (std::int64_t y = a; y <= b; ++y) out.points.emplace_back(x, y);
  }
  return out;
}

std::size_t column_count(const LatticeSample& sample, std::int64_t x) {
  auto lo = std::lower_bound(
      sample.points.begin(), sample.points.end(), x,
      [](const std::pair<std::int64_t, std::int64_t>& p, std::int64_t v) {
        return p.first < v;
      });
  auto hi = std::upper_bound(
      sample.points.begin(), sample.points.end(), x,
      [](std::int64_t v, const std::pair<std::int64_t, std::int64_t>& p) {
        return v < p.first;
      });
  return static_cast<std::size_t>(hi - lo);
}

namespace {

// Primitive direction (num, den) of a slope written in lowest terms.
std::pair<BigInt, BigInt> slope_parts(const Rational& s) {
  return {s.get_num(), s.get_den()};
}

BigInt det2(const std::pair<BigInt, BigInt>& u,
            const std::pair<BigInt, BigInt>& v) {
  return u.first * v.second - u.second * v.first;
}

}  // namespace

NormalFan normal_fan_rays(const Triangle& t) {
  auto [p1, q1] = slope_parts(t.s1);
  auto [p2, q2] = slope_parts(t.s2);
  auto [p3, q3] = slope_parts(t.s3);
  NormalFan fan;
  // Inward normals: the triangle lies above the two lower edges y = s*x
  // (normal (-p, q)) and below the top edge y = s2*x + 1 (normal (p, -q)).
  fan.rays[0] = {-p1, q1};
  fan.rays[1] = {p2, -q2};
  fan.rays[2] = {-p3, q3};

  BigInt d12 = det2(fan.rays[0], fan.rays[1]);
  BigInt d23 = det2(fan.rays[1], fan.rays[2]);
  BigInt d31 = det2(fan.rays[2], fan.rays[0]);

  // (a, b, c) proportional to (det[v2 v3], det[v3 v1], det[v1 v2]) spans the
  // kernel of [v1 v2 v3]; convexity makes the three values share a sign.
  BigInt a = d23, b = d31, c = d12;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt g = gcd(a, gcd(b, c));
  fan.weights = {a / g, b / g, c / g};

  BigInt idx = gcd(abs(d12), gcd(abs(d23), abs(d31)));
  fan.index = idx;
  return fan;
}

namespace {

nlohmann::ordered_json integer_json(const BigInt& value) {
  if (fits_i64(value)) return nlohmann::ordered_json(to_i64(value));
  return nlohmann::ordered_json(value.get_str());
}

}  // namespace

std::string triangle_report_to_json(const Triangle& t,
                                    const TriangleReport& report) {
  nlohmann::ordered_json out;
  out["s1"] = rational_to_string(t.s1);
  out["s2"] = rational_to_string(t.s2);
  out["s3"] = rational_to_string(t.s3);
  out["x1"] = rational_to_string(Rational(t.x1()));
  out["y1"] = rational_to_string(Rational(t.y1()));
  out["x2"] = rational_to_string(Rational(t.x2()));
  out["y2"] = rational_to_string(Rational(t.y2()));
  out["w"] = rational_to_string(report.w);
  out["n"] = integer_json(report.n);
  out["cond1"] = report.cond1;
  out["cond2_count"] = integer_json(report.cond2_count);
  out["cond2_count_ok"] = report.cond2_count_ok;
  out["cond2_nonintegral_ok"] = report.cond2_nonintegral_ok;
  out["passes"] = report.passes;
  return out.dump();
}

std::string normal_fan_to_json(const NormalFan& fan) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json rays = nlohmann::ordered_json::array();
  for (const auto& [x, y] : fan.rays) {
    rays.push_back({integer_json(x), integer_json(y)});
  }
  out["rays"] = rays;
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  for (const BigInt& wt : fan.weights) weights.push_back(integer_json(wt));
  out["weights"] = weights;
  out["index"] = integer_json(fan.index);
  return out.dump();
}

}  // namespace coxcheck
