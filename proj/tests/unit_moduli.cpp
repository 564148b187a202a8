#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "coxcheck/moduli.hpp"

using namespace coxcheck;

TEST_CASE("ray vectors are signed indicator vectors") {
  CHECK(is_ray_vector({BigInt(1), BigInt(0), BigInt(1)}));
  CHECK(is_ray_vector({BigInt(0), BigInt(-1), BigInt(-1)}));
  CHECK_FALSE(is_ray_vector({BigInt(0), BigInt(0)}));      // zero vector
  CHECK_FALSE(is_ray_vector({BigInt(1), BigInt(-1)}));     // mixed signs
  CHECK_FALSE(is_ray_vector({BigInt(2), BigInt(0)}));      // entry not 0/1
}

TEST_CASE("ray enumeration counts") {
  CHECK(sigma_rays(5).size() == 6);     // dimension 2
  CHECK(sigma_rays(6).size() == 14);    // dimension 3
  CHECK(sigma_rays(13).size() == 2046); // dimension 10
  for (const auto& ray : sigma_rays(6)) CHECK(is_ray_vector(ray));
  CHECK_THROWS_AS(sigma_rays(4), std::invalid_argument);
  CHECK_THROWS_AS(sigma_rays(40), std::overflow_error);
}

TEST_CASE("ray enumeration lists positives then their negatives") {
  auto rays = sigma_rays(6);
  std::size_t half = rays.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    for (std::size_t i = 0; i < rays[k].size(); ++i) {
      CHECK(rays[k][i] == -rays[half + k][i]);
      CHECK(rays[k][i] >= 0);
    }
  }
}

TEST_CASE("the built-in configuration verifies completely") {
  BuiltinReport report = verify_builtin();
  CHECK(report.config.basis_are_rays);
  CHECK(report.config.rank_ok);
  CHECK(report.config.saturated);
  CHECK(report.config.quotient_generated);
  CHECK(report.config.relation_holds);
  CHECK(report.config.passes);
  CHECK(report.config.invariant_factors ==
        std::vector<BigInt>(8, BigInt(1)));
  CHECK(report.w_combination_ok);
  CHECK(report.determinant_ok);
  CHECK(report.identity_ok);
  CHECK(report.coefficients_ok);
  CHECK(report.rays_count_ok);
  CHECK(report.passes);
  CHECK(report.combination ==
        std::vector<BigInt>{BigInt(11), BigInt(8), BigInt(4), BigInt(1),
                            BigInt(1), BigInt(1), BigInt(-1), BigInt(-3)});
}

TEST_CASE("the built-in configuration has the displayed shape") {
  Configuration cfg = builtin_example_13();
  CHECK(cfg.n == 13);
  CHECK(cfg.basis.size() == 8);
  for (const auto& vec : cfg.basis) CHECK(vec.size() == 10);
  CHECK(cfg.weights == std::array<BigInt, 3>{BigInt(26), BigInt(15),
                                             BigInt(7)});
  // u = e1, v = e2, w = e3 + e5 + e6.
  CHECK(cfg.u[0] == 1);
  CHECK(cfg.v[1] == 1);
  CHECK(cfg.w[2] == 1);
  CHECK(cfg.w[4] == 1);
  CHECK(cfg.w[5] == 1);
  BigInt total(0);
  for (const BigInt& x : cfg.w) total += x;
  CHECK(total == 3);
}

TEST_CASE("checking is invariant under basis permutation") {
  Configuration cfg = builtin_example_13();
  ConfigReport base = check_configuration(cfg);
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 5; ++trial) {
    Configuration shuffled = cfg;
    std::shuffle(shuffled.basis.begin(), shuffled.basis.end(), rng);
    CHECK(check_configuration(shuffled) == base);
  }
}

TEST_CASE("checking is invariant under negating a basis vector") {
  Configuration cfg = builtin_example_13();
  ConfigReport base = check_configuration(cfg);
  for (std::size_t k = 0; k < cfg.basis.size(); ++k) {
    Configuration negated = cfg;
    for (BigInt& x : negated.basis[k]) x = -x;
    CHECK(check_configuration(negated) == base);
  }
}

TEST_CASE("wrong weights break the relation") {
  Configuration cfg = builtin_example_13();
  cfg.weights = {BigInt(26), BigInt(15), BigInt(8)};
  ConfigReport report = check_configuration(cfg);
  CHECK(report.basis_are_rays);
  CHECK(report.saturated);
  CHECK_FALSE(report.relation_holds);
  CHECK_FALSE(report.passes);
}

TEST_CASE("a non-ray basis vector is detected") {
  Configuration cfg = builtin_example_13();
  cfg.basis[0][0] = 2;
  ConfigReport report = check_configuration(cfg);
  CHECK_FALSE(report.basis_are_rays);
  CHECK_FALSE(report.passes);
}

TEST_CASE("a dependent basis loses rank and saturation") {
  Configuration cfg = builtin_example_13();
  cfg.basis[7] = cfg.basis[0];  // duplicate row
  ConfigReport report = check_configuration(cfg);
  CHECK_FALSE(report.rank_ok);
  CHECK_FALSE(report.passes);
}

TEST_CASE("configuration validation") {
  Configuration cfg = builtin_example_13();
  cfg.n = 6;
  CHECK_THROWS_AS(check_configuration(cfg), std::invalid_argument);

  cfg = builtin_example_13();
  cfg.basis.pop_back();
  CHECK_THROWS_AS(check_configuration(cfg), std::invalid_argument);

  cfg = builtin_example_13();
  cfg.u.pop_back();
  CHECK_THROWS_AS(check_configuration(cfg), std::invalid_argument);

  cfg = builtin_example_13();
  cfg.weights = {BigInt(2), BigInt(4), BigInt(6)};  // gcd 2
  CHECK_THROWS_AS(check_configuration(cfg), std::invalid_argument);

  cfg = builtin_example_13();
  cfg.weights = {BigInt(0), BigInt(15), BigInt(7)};
  CHECK_THROWS_AS(check_configuration(cfg), std::invalid_argument);
}

TEST_CASE("json round trip") {
  Configuration cfg = builtin_example_13();
  std::string text = configuration_to_json(cfg);
  Configuration back = configuration_from_json(text);
  CHECK(back.n == cfg.n);
  CHECK(back.basis == cfg.basis);
  CHECK(back.u == cfg.u);
  CHECK(back.v == cfg.v);
  CHECK(back.w == cfg.w);
  CHECK(back.weights == cfg.weights);
  CHECK(check_configuration(back) == check_configuration(cfg));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(configuration_from_json("not json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(configuration_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      configuration_from_json(
          R"({"n":13,"basis":[],"u":[],"v":[],"w":[]})"),
      std::invalid_argument);  // missing weights
  CHECK_THROWS_AS(
      configuration_from_json(
          R"({"n":"x","basis":[],"u":[],"v":[],"w":[],"weights":[1,1,1]})"),
      std::invalid_argument);  // wrong type
}

TEST_CASE("report serialization carries the five verdicts") {
  std::string text = config_report_to_json(verify_builtin().config);
  CHECK(text.find("\"basis_are_rays\":true") != std::string::npos);
  CHECK(text.find("\"saturated\":true") != std::string::npos);
  CHECK(text.find("\"passes\":true") != std::string::npos);
  CHECK(text.find("\"invariant_factors\":[1,1,1,1,1,1,1,1]") !=
        std::string::npos);
}
