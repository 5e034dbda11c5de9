#include "oracles.hpp"

#include "wexc/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace wexc;

namespace {

CyclotomicInt cyc(std::uint64_t m, std::vector<long> raw) { return cyc_make(m, raw); }

CyclotomicInt random_element(std::mt19937_64& rng, std::uint64_t m) {
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<long> raw(m);
  for (auto& x : raw) x = coef(rng);
  return cyc_make(m, raw);
}

// Independent zero test for sum of zeta_m^e over the multiset: evaluate
// sum x^e modulo Phi_m by exact division.
bool sums_to_zero(std::uint64_t m, const std::vector<std::uint64_t>& exps) {
  std::vector<BigInt> c(m);
  for (auto e : exps) c[e] += 1;
  const IntPoly p(std::move(c));
  if (p.is_zero()) return true;
  try {
    (void)poly_divexact(p, cyclotomic_poly(m));
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("cyc_make canonical form") {
  CHECK(cyc(3, {1, 1, 1}).is_zero());
  CHECK(cyc(4, {1, 0, 1, 0}).is_zero());
  const auto x = cyc(5, {1, 1, 0, 0, 0});
  CHECK_FALSE(x.is_zero());
  CHECK(x.coeffs().size() == 4);
  CHECK(x == CyclotomicInt::integer(5, 1) + CyclotomicInt::zeta_power(5, 1));
  CHECK(cyc(7, {}).is_zero());
  CHECK(cyc(3, {0, 0, 0, 5}) == CyclotomicInt::integer(3, 5));
  CHECK(CyclotomicInt::zeta_power(6, 3) == CyclotomicInt::integer(6, -1));
  CHECK_THROWS_AS(cyc(0, {1}), std::invalid_argument);
}

TEST_CASE("cyc_mul examples") {
  CHECK(cyc_mul(cyc(3, {1, 1, 0}), cyc(3, {1, 0, 1})) == CyclotomicInt::integer(3, 1));
  CHECK(cyc_mul(cyc(5, {1, 2, 3}), cyc(5, {})).is_zero());
  const auto i = CyclotomicInt::zeta_power(4, 1);
  CHECK(cyc_mul(i, i) == CyclotomicInt::integer(4, -1));
  CHECK(cyc_mul(i, i).as_integer() == BigInt(-1));
  CHECK_FALSE(i.as_integer().has_value());
  CHECK_THROWS_AS(cyc_mul(i, CyclotomicInt::integer(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(i + CyclotomicInt::integer(3, 1), std::invalid_argument);
}

TEST_CASE("cyc_norm examples") {
  CHECK(cyc_norm(CyclotomicInt::integer(7, 2)) == 64);
  CHECK(cyc_norm(cyc(7, {1, 1})) == 1);
  CHECK(cyc_norm(cyc(7, {1, 1})) == resultant(cyclotomic_poly(7), IntPoly{1, 1}));
  CHECK(cyc_norm(CyclotomicInt::integer(7, 0)) == 0);
  CHECK(cyc_norm(cyc(7, {1, 2})) == 43);
  CHECK(cyc_norm(cyc(4, {1, 1})) == 2);
}

TEST_CASE("norm of an integer constant") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13})
    for (long c : {-3L, -1L, 0L, 1L, 2L, 6L, 10L}) CHECK(cyc_norm(CyclotomicInt::integer(q, c)) == big_pow(c, q - 1));
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(5);
  for (std::uint64_t m : {3, 4, 5, 7, 12}) {
    for (int iter = 0; iter < 60; ++iter) {
      const auto x = random_element(rng, m);
      const auto y = random_element(rng, m);
      CHECK(cyc_norm(x * y) == cyc_norm(x) * cyc_norm(y));
    }
  }
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(6);
  for (std::uint64_t m : {5, 8, 9, 12}) {
    for (int iter = 0; iter < 30; ++iter) {
      const auto x = random_element(rng, m), y = random_element(rng, m), z = random_element(rng, m);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - x).is_zero());
    }
  }
}

TEST_CASE("zero exactly when the cyclotomic polynomial divides") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (int iter = 0; iter < 80; ++iter) {
      std::vector<long> raw(m + 3);
      for (auto& x : raw) x = coef(rng);
      if (iter % 4 == 0) {
        // Plant a multiple of Phi_m.
        const IntPoly planted = poly_mul(cyclotomic_poly(m), IntPoly{coef(rng), coef(rng), 1});
        raw.assign(planted.coeffs().size(), 0);
        for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = planted.coeffs()[i].get_si();
      }
      IntPoly p(std::vector<BigInt>(raw.begin(), raw.end()));
      bool divisible = p.is_zero();
      if (!divisible) {
        try {
          (void)poly_divexact(p, cyclotomic_poly(m));
          divisible = true;
        } catch (const std::domain_error&) {
        }
      }
      CHECK(cyc_make(m, raw).is_zero() == divisible);
    }
  }
}

TEST_CASE("w_membership examples") {
  CHECK(w_membership(5, 6));
  CHECK_FALSE(w_membership(1, 6));
  CHECK_FALSE(w_membership(1, 30));
  CHECK_FALSE(w_membership(3, 7));
  CHECK(w_membership(0, 7));
  CHECK(w_membership(14, 7));
  CHECK_FALSE(w_membership(1, 1000003));
  CHECK_THROWS_AS(w_membership(2, 1), std::invalid_argument);
}

TEST_CASE("vanishing_sum_search examples") {
  auto w = vanishing_sum_search(2, 2);
  REQUIRE(w);
  CHECK(w->exponents == std::vector<std::uint64_t>{0, 1});
  w = vanishing_sum_search(5, 6);
  REQUIRE(w);
  CHECK(w->exponents == std::vector<std::uint64_t>{0, 0, 2, 3, 4});
  CHECK_FALSE(vanishing_sum_search(1, 12));
  CHECK(vanishing_sum_search(0, 5)->exponents.empty());
  CHECK_THROWS_AS(vanishing_sum_search(20, 20, 1000), std::length_error);
}

TEST_CASE("membership agrees with exhaustive search") {
  for (std::uint64_t m = 2; m <= 12; ++m) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      const auto w = vanishing_sum_search(n, m);
      CHECK_MESSAGE(w_membership(n, m) == w.has_value(), "m=" << m << " n=" << n);
      if (w) {
        CHECK(w->order == m);
        CHECK(w->exponents.size() == n);
        CHECK(std::is_sorted(w->exponents.begin(), w->exponents.end()));
        CHECK(sums_to_zero(m, w->exponents));
        CyclotomicInt s = CyclotomicInt::integer(m, 0);
        for (auto e : w->exponents) s += CyclotomicInt::zeta_power(m, e);
        CHECK(s.is_zero());
      }
    }
  }
}
