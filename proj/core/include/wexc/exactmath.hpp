// Exact integer and integer-polynomial kernel.
//
// Everything here works over arbitrary-precision integers (GMP) and never
// rounds. The polynomial type is dense; the matrix type is row-major.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wexc {

using BigInt = mpz_class;

/// Dense polynomial with integer coefficients; coeffs()[i] is the coefficient
/// of x^i. The zero polynomial has no stored coefficients, every other value
/// has a nonzero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * x^k
  static IntPoly monomial(const BigInt& c, std::size_t k);
  /// x^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  BigInt coeff(std::size_t i) const;

  BigInt evaluate(const BigInt& x) const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& c) { return lhs *= c; }
  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

  /// Human-readable form, highest degree first, e.g. "x^2 - 1".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& f, const IntPoly& g);

/// Remainder of f modulo a monic divisor. Throws std::invalid_argument when
/// the divisor is zero or not monic.
IntPoly poly_rem_monic(const IntPoly& f, const IntPoly& divisor);

/// Exact quotient f / g. Throws std::domain_error if g does not divide f over
/// the integers, std::invalid_argument if g is zero.
IntPoly poly_divexact(const IntPoly& f, const IntPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly poly_prem(const IntPoly& f, const IntPoly& g);

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
/// Equivalently the determinant of the Sylvester matrix with the rows of f
/// on top. Res(f, 0) = 0 for nonconstant f, Res(c, g) = c^deg(g).
/// Throws std::invalid_argument if f is the zero polynomial.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const BigInt> entries() const noexcept { return entries_; }
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument on a
/// non-square matrix. The 0x0 determinant is 1.
BigInt bareiss_det(const IntMatrix& m);

struct SmithForm {
  /// d_1 | d_2 | ... | d_r with r = min(rows, cols); zeros trail.
  std::vector<BigInt> invariant_factors;

  /// Product of the nonzero invariant factors.
  BigInt nonzero_product() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  /// Strictly increasing primes.
  std::vector<PrimePower> pairs;

  BigInt value() const;
  /// "2^3*71"; "1" for the empty factorization.
  std::string to_string() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Primality test. Deterministic Miller-Rabin below 3.3e24 (first 13 prime
/// bases); GMP's BPSW-based test above that.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Complete prime factorization of n >= 1. Throws std::invalid_argument for
/// n <= 0.
Factorization factorize(const BigInt& n);

/// The m-th cyclotomic polynomial. Throws std::invalid_argument for m = 0.
IntPoly cyclotomic_poly(std::size_t m);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t m);

/// Distinct prime divisors of m, increasing.
std::vector<std::uint64_t> prime_divisors(std::uint64_t m);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt big_pow(const BigInt& base, std::uint64_t exp);

}  // namespace wexc
