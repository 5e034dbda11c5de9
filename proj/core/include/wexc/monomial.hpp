// Finite monomial groups G = D x| C_q inside SL(q, C).
//
// D is diagonal and is stored as a subgroup of (Z/m)^q: the exponent vector
// beta stands for diag(zeta_m^beta_1, ..., zeta_m^beta_q). The cyclic part is
// always the standard shift tau: e_i -> e_(i+1), e_q -> e_1, so it is never
// stored. Scalars are constant exponent vectors.

#pragma once

#include "wexc/exactmath.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wexc {

using ExponentVector = std::vector<std::uint64_t>;

struct DiagonalGroup {
  std::uint32_t q = 0;
  std::uint64_t m = 1;
  std::vector<ExponentVector> generators;

  friend bool operator==(const DiagonalGroup&, const DiagonalGroup&) = default;
};

enum class GroupErrorKind {
  NotPrime,
  EvenDimension,
  SLViolation,
  NotRotationClosed,
  /// Wrong vector length, residue outside [0, m), or m = 0.
  Malformed,
};

std::string to_string(GroupErrorKind kind);

/// Structured rejection of a candidate group.
class GroupError : public std::invalid_argument {
 public:
  GroupError(GroupErrorKind kind, const std::string& what, std::optional<std::size_t> generator = std::nullopt,
             std::optional<ExponentVector> witness = std::nullopt);

  GroupErrorKind kind() const noexcept { return kind_; }
  /// Offending generator, for SLViolation and Malformed.
  const std::optional<std::size_t>& generator_index() const noexcept { return generator_; }
  /// A tau-conjugate of a generator lying outside D, for NotRotationClosed.
  const std::optional<ExponentVector>& witness() const noexcept { return witness_; }

 private:
  GroupErrorKind kind_;
  std::optional<std::size_t> generator_;
  std::optional<ExponentVector> witness_;
};

/// A validated D x| <tau>: q is an odd prime, every generator satisfies the
/// SL condition, and D is closed under conjugation by tau.
class MonomialGroup {
 public:
  const DiagonalGroup& diagonal() const noexcept { return d_; }
  std::uint32_t q() const noexcept { return d_.q; }
  std::uint64_t m() const noexcept { return d_.m; }
  /// |D|
  const BigInt& diagonal_order() const noexcept { return order_; }
  /// |G| = q |D|
  BigInt order() const { return BigInt(q()) * order_; }

 private:
  friend MonomialGroup group_validate(const DiagonalGroup&);
  MonomialGroup(DiagonalGroup d, BigInt order) : d_(std::move(d)), order_(std::move(order)) {}
  DiagonalGroup d_;
  BigInt order_;
};

/// Groups up to this order are checked for rotation closure by enumeration;
/// larger ones by lattice membership.
inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// Throws GroupError.
MonomialGroup group_validate(const DiagonalGroup& candidate);

/// Order of the subgroup of (Z/m)^q generated by the exponent vectors, via the
/// Smith form of [generators; m I]. Throws GroupError (Malformed,
/// SLViolation).
BigInt group_order(const DiagonalGroup& d);

/// Least n >= 1 with n*beta constant mod m: m / gcd(m, beta_i - beta_1).
std::uint64_t element_cycle_order(const DiagonalGroup& d, std::span<const std::uint64_t> beta);

/// The exponent vector of tau g tau^-1: a right rotation,
/// (beta_q, beta_1, ..., beta_(q-1)).
ExponentVector conjugate_by_shift(std::span<const std::uint64_t> beta);

/// Whether beta (mod m) lies in the subgroup generated by d's generators.
bool lattice_contains(const DiagonalGroup& d, std::span<const std::uint64_t> beta);

/// Generators plus all their rotations. Throws GroupError (Malformed,
/// SLViolation).
DiagonalGroup rotation_closure(const DiagonalGroup& d);

/// Every element of the generated subgroup, in breadth-first order from 0.
/// Throws std::length_error if the order exceeds limit.
std::vector<ExponentVector> enumerate_elements(const DiagonalGroup& d, std::uint64_t limit = kEnumerationLimit);

}  // namespace wexc
