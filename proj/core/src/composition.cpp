#include "wexc/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wexc {

Composition::Composition(std::vector<std::uint32_t> exponents) : a_(std::move(exponents)) {
  if (a_.empty()) throw std::invalid_argument("composition must have at least one part");
  weight_ = std::accumulate(a_.begin(), a_.end(), std::uint32_t{0});
  if (weight_ == 0) throw std::invalid_argument("composition must have positive weight");
}

bool Composition::is_single_variable() const noexcept {
  return std::count_if(a_.begin(), a_.end(), [](std::uint32_t v) { return v != 0; }) == 1;
}

Composition Composition::rotated(std::size_t k) const {
  std::vector<std::uint32_t> out(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out[i] = a_[(i + k) % a_.size()];
  return Composition(std::move(out));
}

Composition Composition::canonical() const {
  Composition best = *this;
  for (std::size_t k = 1; k < a_.size(); ++k) {
    Composition r = rotated(k);
    if (r.a_ > best.a_) best = std::move(r);
  }
  return best;
}

bool Composition::is_canonical() const { return is_rotation_maximal(a_); }

IntPoly Composition::symbol() const {
  std::vector<BigInt> c(a_.begin(), a_.end());
  return IntPoly(std::move(c));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s + ")";
}

bool is_rotation_maximal(std::span<const std::uint32_t> a) {
  const std::size_t n = a.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t r = a[(i + k) % n];
      if (r > a[i]) return false;
      if (r < a[i]) break;
    }
  }
  return true;
}

BigInt necklace_count(std::uint32_t q, std::uint32_t d) {
  BigInt total = binomial(d + q - 1, q - 1);
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), total.get_mpz_t(), q);
  return out;
}

void for_each_composition(std::uint32_t q, std::uint32_t d,
                          const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (q == 0) throw std::invalid_argument("for_each_composition: q must be positive");
  std::vector<std::uint32_t> a(q, 0);
  a[0] = d;
  for (;;) {
    visit(a);
    // Next smaller composition: take one unit from the last movable part and
    // push everything to its right into the following slot.
    std::size_t i = q - 1;
    while (i > 0 && a[i - 1] == 0) --i;
    if (i == 0) return;
    --i;
    std::uint32_t rest = 0;
    for (std::size_t j = i + 1; j < q; ++j) {
      rest += a[j];
      a[j] = 0;
    }
    --a[i];
    a[i + 1] = rest + 1;
  }
}

void for_each_necklace(std::uint32_t q, std::uint32_t d,
                       const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (!is_prime(std::uint64_t{q})) throw std::invalid_argument("necklaces: q must be prime");
  if (d == 0 || d >= q) throw std::invalid_argument("necklaces: weight must satisfy 0 < d < q");
  for_each_composition(q, d, [&](std::span<const std::uint32_t> a) {
    if (is_rotation_maximal(a)) visit(a);
  });
}

std::vector<NecklaceClass> necklaces(std::uint32_t q, std::uint32_t d) {
  std::vector<NecklaceClass> out;
  for_each_necklace(q, d, [&](std::span<const std::uint32_t> a) {
    out.push_back({Composition(std::vector<std::uint32_t>(a.begin(), a.end())), d, q});
  });
  return out;
}

}  // namespace wexc
