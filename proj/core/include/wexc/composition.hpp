// Exponent vectors of monomials and their classes under cyclic rotation.

#pragma once

#include "wexc/exactmath.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wexc {

/// Exponents (a_1, ..., a_q) of the monomial x_1^a_1 ... x_q^a_q. Also read as
/// the first row of a circulant. Weight is the total degree, always positive.
class Composition {
 public:
  /// Throws std::invalid_argument if empty or of weight zero.
  explicit Composition(std::vector<std::uint32_t> exponents);

  std::uint32_t q() const noexcept { return static_cast<std::uint32_t>(a_.size()); }
  std::uint32_t weight() const noexcept { return weight_; }
  std::span<const std::uint32_t> exponents() const noexcept { return a_; }
  std::uint32_t operator[](std::size_t i) const { return a_[i]; }

  /// All weight on one coordinate.
  bool is_single_variable() const noexcept;
  /// Left rotation by k: entry i of the result is a_(i+k).
  Composition rotated(std::size_t k) const;
  /// Greatest rotation in lexicographic order; the class representative.
  Composition canonical() const;
  bool is_canonical() const;
  /// f(x) = sum a_(i+1) x^i.
  IntPoly symbol() const;

  std::string to_string() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint32_t> a_;
  std::uint32_t weight_ = 0;
};

/// A rotation class of weight-d compositions, 0 < d < q, q prime; the action
/// is free so the class has exactly q members.
struct NecklaceClass {
  Composition representative;
  std::uint32_t weight = 0;
  std::uint32_t class_size = 0;
};

/// C(d+q-1, q-1) / q, the number of classes for prime q and 0 < d < q.
BigInt necklace_count(std::uint32_t q, std::uint32_t d);

/// Calls visit(exponents) for every composition of d into q nonnegative parts,
/// in descending lexicographic order. Throws std::invalid_argument for q = 0.
void for_each_composition(std::uint32_t q, std::uint32_t d,
                          const std::function<void(std::span<const std::uint32_t>)>& visit);

/// Whether a is the greatest of its rotations.
bool is_rotation_maximal(std::span<const std::uint32_t> a);

/// Calls visit(exponents) for each class representative of weight d, in
/// descending lexicographic order starting at (d, 0, ..., 0). The span is
/// only valid during the call. Throws std::invalid_argument unless q is
/// prime and 0 < d < q.
void for_each_necklace(std::uint32_t q, std::uint32_t d,
                       const std::function<void(std::span<const std::uint32_t>)>& visit);

std::vector<NecklaceClass> necklaces(std::uint32_t q, std::uint32_t d);

}  // namespace wexc
