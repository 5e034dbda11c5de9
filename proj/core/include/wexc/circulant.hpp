// Integer circulant matrices.
//
// Row i of the realized matrix is the first row rotated right by i places:
//
//   a1 a2 ... an
//   an a1 ... a(n-1)
//   ...
//   a2 a3 ... a1
//
// With the symbol polynomial f(x) = sum a(i+1) x^i, the eigenvalue attached to
// the eigenvector (1, w, ..., w^(n-1)) is f(w), for every n-th root of unity w.

#pragma once

#include "wexc/cyclotomic.hpp"
#include "wexc/exactmath.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wexc {

class Circulant {
 public:
  /// Throws std::invalid_argument on an empty row.
  explicit Circulant(std::vector<BigInt> first_row);
  static Circulant from_ints(std::span<const long> first_row);

  std::size_t size() const noexcept { return first_row_.size(); }
  std::span<const BigInt> first_row() const noexcept { return first_row_; }
  /// Sum of the first row, f(1).
  BigInt row_sum() const;
  /// f(x) = sum first_row[i] x^i.
  IntPoly symbol() const;
  IntMatrix realize() const;

 private:
  std::vector<BigInt> first_row_;
};

/// Entry k is f(zeta_n^k) as an element of Z[zeta_n], k = 0..n-1.
using EigenvalueList = std::vector<CyclotomicInt>;

EigenvalueList circ_eigenvalues(const Circulant& c);

enum class DetMethod {
  /// Bareiss on the realized matrix.
  elimination,
  /// Res(x^n - 1, f), the product of all eigenvalues.
  eigenproduct,
  /// f(1) * Res(Phi_n, f); n must be prime.
  norm_factored,
};

std::string_view to_string(DetMethod m) noexcept;
/// Throws std::invalid_argument on an unknown name.
DetMethod parse_det_method(std::string_view name);

/// Exact determinant. Throws std::invalid_argument when norm_factored is
/// requested for composite n.
BigInt circ_det(const Circulant& c, DetMethod method);

enum class ScanMode {
  /// q must be prime.
  strict,
  /// Any q >= 2; only for showing what goes wrong without primality.
  permissive,
};

struct ScanReport {
  std::uint32_t q = 0;
  std::uint64_t rows_checked = 0;
  std::uint64_t zero_determinants = 0;
  /// Rows with |det| > (sum a_i)^q; always empty unless something is broken.
  std::uint64_t bound_violations = 0;
  BigInt min_abs_det;
  BigInt max_abs_det;
  /// Up to the first 16 rows with zero determinant.
  std::vector<std::vector<std::uint32_t>> zero_rows;

  bool passed() const noexcept { return rows_checked > 0 && zero_determinants == 0 && bound_violations == 0; }
};

/// Largest q accepted by the exhaustive scan.
inline constexpr std::uint32_t kMaxScanOrder = 11;

/// Checks every first row with nonnegative entries and 0 < sum < q for a
/// nonzero determinant. Strict mode uses norm_factored and requires q prime;
/// permissive mode uses elimination. Throws std::invalid_argument if q is not
/// prime in strict mode, or q < 2, or q > kMaxScanOrder.
ScanReport circ_nonvanishing_scan(std::uint32_t q, ScanMode mode = ScanMode::strict);

}  // namespace wexc
