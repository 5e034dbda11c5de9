// Exact arithmetic in Z[zeta_m] and vanishing sums of roots of unity.

#pragma once

#include "wexc/exactmath.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wexc {

/// Element of Z[zeta_m], stored as the canonical residue modulo Phi_m: exactly
/// phi(m) integer coefficients on 1, zeta, ..., zeta^(phi(m)-1). Two elements
/// are equal iff their coefficient vectors are equal.
class CyclotomicInt {
 public:
  /// Canonical form of sum raw[i] * zeta_m^i. raw may have any length.
  /// Throws std::invalid_argument for m = 0.
  static CyclotomicInt make(std::uint64_t m, std::span<const BigInt> raw);
  static CyclotomicInt make(std::uint64_t m, std::span<const long> raw);
  static CyclotomicInt from_poly(std::uint64_t m, const IntPoly& poly);
  static CyclotomicInt integer(std::uint64_t m, const BigInt& c);
  static CyclotomicInt zeta_power(std::uint64_t m, std::uint64_t k);

  std::uint64_t order() const noexcept { return order_; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  /// The value as a rational integer, if it lies in Z.
  std::optional<BigInt> as_integer() const;
  /// Field norm down to Q, computed as Res(Phi_m, representative).
  BigInt norm() const;
  const IntPoly& modulus() const noexcept { return *modulus_; }

  CyclotomicInt& operator+=(const CyclotomicInt& rhs);
  CyclotomicInt& operator-=(const CyclotomicInt& rhs);
  friend CyclotomicInt operator+(CyclotomicInt lhs, const CyclotomicInt& rhs) { return lhs += rhs; }
  friend CyclotomicInt operator-(CyclotomicInt lhs, const CyclotomicInt& rhs) { return lhs -= rhs; }
  friend CyclotomicInt operator*(const CyclotomicInt& lhs, const CyclotomicInt& rhs);
  friend bool operator==(const CyclotomicInt& lhs, const CyclotomicInt& rhs);

  std::string to_string() const;

 private:
  CyclotomicInt(std::uint64_t m, std::shared_ptr<const IntPoly> modulus, std::vector<BigInt> coeffs);
  IntPoly as_poly() const;

  std::uint64_t order_ = 1;
  std::shared_ptr<const IntPoly> modulus_;
  std::vector<BigInt> coeffs_;
};

inline CyclotomicInt cyc_make(std::uint64_t m, std::span<const long> raw) { return CyclotomicInt::make(m, raw); }
/// Throws std::invalid_argument on mismatched orders.
inline CyclotomicInt cyc_mul(const CyclotomicInt& x, const CyclotomicInt& y) { return x * y; }
inline BigInt cyc_norm(const CyclotomicInt& x) { return x.norm(); }

/// Whether n is a nonnegative integer combination of the distinct primes
/// dividing m, i.e. whether n roots of unity of order dividing m can sum to
/// zero. Throws std::invalid_argument for m < 2.
bool w_membership(std::uint64_t n, std::uint64_t m);

struct VanishingWitness {
  std::uint64_t order = 0;
  /// Sorted exponents e; sum of zeta_order^e is zero.
  std::vector<std::uint64_t> exponents;
};

/// Hard cap on the number of candidate multisets searched.
inline constexpr std::uint64_t kVanishingSearchLimit = 10'000'000;

/// Exhaustive search over multisets of n exponents in [0, m) for one whose
/// roots of unity sum to zero; the lexicographically first sorted multiset is
/// returned. Throws std::length_error when C(n+m-1, n) exceeds the limit and
/// std::invalid_argument for m < 2.
std::optional<VanishingWitness> vanishing_sum_search(std::uint64_t n, std::uint64_t m,
                                                     std::uint64_t limit = kVanishingSearchLimit);

}  // namespace wexc
