// Test-only reference computations. Each one takes a different route from
// the library code it is compared against: cofactor expansion instead of
// elimination, Sylvester determinants instead of sub-resultant sequences,
// minor gcds instead of Smith reduction, brute enumeration instead of
// lattice arithmetic.

#pragma once

#include "wexc/exactmath.hpp"
#include "wexc/monomial.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using wexc::BigInt;
using wexc::IntMatrix;
using wexc::IntPoly;

// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    BigInt term = m(0, c) * cofactor_det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

// Sylvester matrix with deg g rows of f's coefficients on top.
inline IntMatrix sylvester(const IntPoly& f, const IntPoly& g) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeff(n - k);
  return s;
}

// Res(f, g) for deg f, deg g >= 1 as the Sylvester determinant.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) { return cofactor_det(sylvester(f, g)); }

// gcd of all k x k minors.
inline BigInt minor_gcd(const IntMatrix& m, std::size_t k) {
  BigInt g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = start; r < m.rows(); ++r) {
      rows[depth] = r;
      pick_rows(r + 1, depth + 1);
    }
  };
  pick_cols = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      BigInt det = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      return;
    }
    for (std::size_t c = start; c < m.cols(); ++c) {
      cols[depth] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

// Every composition of d into q parts, any order.
inline std::vector<std::vector<std::uint32_t>> all_compositions(std::uint32_t q, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(q, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == q) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

// Elements of the subgroup of (Z/m)^q generated by gens, by closure under
// addition.
inline std::set<std::vector<std::uint64_t>> brute_elements(std::uint32_t q, std::uint64_t m,
                                                           const std::vector<std::vector<std::uint64_t>>& gens) {
  std::set<std::vector<std::uint64_t>> elems{std::vector<std::uint64_t>(q, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::uint64_t>> snapshot(elems.begin(), elems.end());
    for (const auto& e : snapshot) {
      for (const auto& g : gens) {
        std::vector<std::uint64_t> s(q);
        for (std::size_t i = 0; i < q; ++i) s[i] = (e[i] + g[i]) % m;
        if (elems.insert(s).second) grew = true;
      }
    }
  }
  return elems;
}

// Character exponent of the monomial x^a under diag(zeta_m^beta).
inline std::uint64_t monomial_character(const std::vector<std::uint32_t>& a, const std::vector<std::uint64_t>& beta,
                                        std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c = (c + a[i] * (beta[i] % m)) % m;
  return c;
}

// Exponents of tau(x^a): x_i -> x_(i+1), so the exponent of x_(i+1) becomes a_i.
inline std::vector<std::uint32_t> shift_monomial(const std::vector<std::uint32_t>& a) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[(i + 1) % a.size()] = a[i];
  return out;
}

// Least degree < q of a monomial whose whole tau-orbit carries one character
// for every element of D (enumerated); 0 if none.
inline std::uint32_t brute_semi_invariant_degree(std::uint32_t q, std::uint64_t m,
                                                 const std::vector<std::vector<std::uint64_t>>& gens) {
  const auto elems = brute_elements(q, m, gens);
  for (std::uint32_t d = 1; d < q; ++d) {
    for (const auto& a : all_compositions(q, d)) {
      bool constant = true;
      for (const auto& beta : elems) {
        auto cur = a;
        const std::uint64_t c0 = monomial_character(cur, beta, m);
        for (std::uint32_t i = 1; i < q && constant; ++i) {
          cur = shift_monomial(cur);
          constant = monomial_character(cur, beta, m) == c0;
        }
        if (!constant) break;
      }
      if (constant) return d;
    }
  }
  return 0;
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long lo, long hi) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(lo, hi);
  const int d = deg(rng);
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coef(rng);
  if (sgn(c.back()) == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> coef(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coef(rng);
  return m;
}

}  // namespace oracle
