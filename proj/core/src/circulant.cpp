#include "wexc/circulant.hpp"

#include "wexc/composition.hpp"

#include <stdexcept>
#include <string>

namespace wexc {

Circulant::Circulant(std::vector<BigInt> first_row) : first_row_(std::move(first_row)) {
  if (first_row_.empty()) throw std::invalid_argument("circulant: first row is empty");
}

Circulant Circulant::from_ints(std::span<const long> first_row) {
  return Circulant(std::vector<BigInt>(first_row.begin(), first_row.end()));
}

BigInt Circulant::row_sum() const {
  BigInt s = 0;
  for (const auto& a : first_row_) s += a;
  return s;
}

IntPoly Circulant::symbol() const { return IntPoly(first_row_); }

IntMatrix Circulant::realize() const {
  const std::size_t n = size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = first_row_[(c + n - r) % n];
  return m;
}

EigenvalueList circ_eigenvalues(const Circulant& c) {
  const std::size_t n = c.size();
  EigenvalueList out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // f(zeta^k) = sum a_i zeta^(k*i); collect by exponent mod n first.
    std::vector<BigInt> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[(k * i) % n] += c.first_row()[i];
    out.push_back(CyclotomicInt::make(n, raw));
  }
  return out;
}

std::string_view to_string(DetMethod m) noexcept {
  switch (m) {
    case DetMethod::elimination:
      return "elimination";
    case DetMethod::eigenproduct:
      return "eigenproduct";
    case DetMethod::norm_factored:
      return "norm_factored";
  }
  return "unknown";
}

DetMethod parse_det_method(std::string_view name) {
  if (name == "elimination") return DetMethod::elimination;
  if (name == "eigenproduct") return DetMethod::eigenproduct;
  if (name == "norm_factored") return DetMethod::norm_factored;
  throw std::invalid_argument("unknown determinant method: " + std::string(name));
}

BigInt circ_det(const Circulant& c, DetMethod method) {
  switch (method) {
    case DetMethod::elimination:
      return bareiss_det(c.realize());
    case DetMethod::eigenproduct:
      return resultant(IntPoly::x_pow_minus_one(c.size()), c.symbol());
    case DetMethod::norm_factored: {
      if (!is_prime(std::uint64_t{c.size()}))
        throw std::invalid_argument("norm_factored needs a prime size, got " + std::to_string(c.size()));
      return c.row_sum() * resultant(cyclotomic_poly(c.size()), c.symbol());
    }
  }
  throw std::invalid_argument("unknown determinant method");
}

ScanReport circ_nonvanishing_scan(std::uint32_t q, ScanMode mode) {
  if (q < 2) throw std::invalid_argument("scan: q must be at least 2");
  if (q > kMaxScanOrder) throw std::invalid_argument("scan: q above the exhaustive limit");
  const bool prime = is_prime(std::uint64_t{q});
  if (mode == ScanMode::strict && !prime) throw std::invalid_argument("scan: q must be prime");

  ScanReport report;
  report.q = q;
  const IntPoly phi = cyclotomic_poly(q);
  bool first = true;
  for (std::uint32_t d = 1; d < q; ++d) {
    const BigInt bound = big_pow(BigInt(d), q);
    for_each_composition(q, d, [&](std::span<const std::uint32_t> a) {
      std::vector<BigInt> row(a.begin(), a.end());
      BigInt det;
      if (mode == ScanMode::strict) {
        det = BigInt(d) * resultant(phi, IntPoly(row));
      } else {
        det = circ_det(Circulant(std::move(row)), DetMethod::elimination);
      }
      BigInt mag = abs(det);
      ++report.rows_checked;
      if (sgn(mag) == 0) {
        ++report.zero_determinants;
        if (report.zero_rows.size() < 16) report.zero_rows.emplace_back(a.begin(), a.end());
      }
      if (mag > bound) ++report.bound_violations;
      if (first || mag < report.min_abs_det) report.min_abs_det = mag;
      if (first || mag > report.max_abs_det) report.max_abs_det = mag;
      first = false;
    });
  }
  return report;
}

}  // namespace wexc
