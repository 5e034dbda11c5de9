#include "wexc/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace wexc {

namespace {

std::shared_ptr<const IntPoly> modulus_for(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  return std::make_shared<const IntPoly>(cyclotomic_poly(m));
}

std::vector<BigInt> padded(const IntPoly& p, std::size_t len) {
  std::vector<BigInt> v(len);
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size() && i < len; ++i) v[i] = c[i];
  return v;
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint64_t m, std::shared_ptr<const IntPoly> modulus, std::vector<BigInt> coeffs)
    : order_(m), modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

CyclotomicInt CyclotomicInt::from_poly(std::uint64_t m, const IntPoly& poly) {
  auto mod = modulus_for(m);
  const auto phi = static_cast<std::size_t>(mod->degree());
  IntPoly reduced = poly_rem_monic(poly, *mod);
  return CyclotomicInt(m, std::move(mod), padded(reduced, phi));
}

CyclotomicInt CyclotomicInt::make(std::uint64_t m, std::span<const BigInt> raw) {
  return from_poly(m, IntPoly(std::vector<BigInt>(raw.begin(), raw.end())));
}

CyclotomicInt CyclotomicInt::make(std::uint64_t m, std::span<const long> raw) {
  std::vector<BigInt> v(raw.begin(), raw.end());
  return from_poly(m, IntPoly(std::move(v)));
}

CyclotomicInt CyclotomicInt::integer(std::uint64_t m, const BigInt& c) { return from_poly(m, IntPoly::constant(c)); }

CyclotomicInt CyclotomicInt::zeta_power(std::uint64_t m, std::uint64_t k) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  return from_poly(m, IntPoly::monomial(BigInt(1), static_cast<std::size_t>(k % m)));
}

bool CyclotomicInt::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

std::optional<BigInt> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return std::nullopt;
  return coeffs_.empty() ? BigInt(0) : coeffs_[0];
}

IntPoly CyclotomicInt::as_poly() const { return IntPoly(coeffs_); }

BigInt CyclotomicInt::norm() const {
  if (is_zero()) return 0;
  return resultant(*modulus_, as_poly());
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
  if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
  if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& lhs, const CyclotomicInt& rhs) {
  if (lhs.order_ != rhs.order_) throw std::invalid_argument("cyclotomic orders differ");
  IntPoly product = poly_rem_monic(lhs.as_poly() * rhs.as_poly(), *lhs.modulus_);
  return CyclotomicInt(lhs.order_, lhs.modulus_, padded(product, lhs.coeffs_.size()));
}

bool operator==(const CyclotomicInt& lhs, const CyclotomicInt& rhs) {
  return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string CyclotomicInt::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += '-';
    BigInt mag = abs(c);
    if (i == 0 || mag != 1) s += mag.get_str();
    if (i >= 1) s += "z" + std::to_string(order_);
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

bool w_membership(std::uint64_t n, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("w_membership: m must be at least 2");
  const auto primes = prime_divisors(m);
  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (std::uint64_t v = 1; v <= n; ++v) {
    for (std::uint64_t p : primes) {
      if (p <= v && reachable[v - p]) {
        reachable[v] = true;
        break;
      }
    }
  }
  return reachable[n];
}

std::optional<VanishingWitness> vanishing_sum_search(std::uint64_t n, std::uint64_t m, std::uint64_t limit) {
  if (m < 2) throw std::invalid_argument("vanishing_sum_search: m must be at least 2");
  if (binomial(n + m - 1, n) > BigInt(std::to_string(limit)))
    throw std::length_error("vanishing_sum_search: C(n+m-1, n) exceeds the search limit");

  // Canonical images of zeta^e for e in [0, m); coefficients are tiny, so
  // the running sum fits comfortably in machine integers.
  const IntPoly modulus = cyclotomic_poly(m);
  const auto phi = static_cast<std::size_t>(modulus.degree());
  std::vector<std::vector<long>> basis(m, std::vector<long>(phi, 0));
  for (std::uint64_t e = 0; e < m; ++e) {
    IntPoly r = poly_rem_monic(IntPoly::monomial(BigInt(1), e), modulus);
    for (std::size_t i = 0; i < phi; ++i) basis[e][i] = r.coeff(i).get_si();
  }

  std::vector<std::uint64_t> chosen;
  chosen.reserve(n);
  std::vector<long> sum(phi, 0);
  auto is_zero = [&] { return std::all_of(sum.begin(), sum.end(), [](long v) { return v == 0; }); };

  // Depth-first over nondecreasing exponent sequences, in lexicographic order.
  auto search = [&](auto&& self, std::uint64_t start) -> bool {
    if (chosen.size() == n) return is_zero();
    for (std::uint64_t e = start; e < m; ++e) {
      chosen.push_back(e);
      for (std::size_t i = 0; i < phi; ++i) sum[i] += basis[e][i];
      if (self(self, e)) return true;
      for (std::size_t i = 0; i < phi; ++i) sum[i] -= basis[e][i];
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return VanishingWitness{m, chosen};
}

}  // namespace wexc
