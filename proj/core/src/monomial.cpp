#include "wexc/monomial.hpp"

#include "wide.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace wexc {

std::string to_string(GroupErrorKind kind) {
  switch (kind) {
    case GroupErrorKind::NotPrime:
      return "NotPrime";
    case GroupErrorKind::EvenDimension:
      return "EvenDimension";
    case GroupErrorKind::SLViolation:
      return "SLViolation";
    case GroupErrorKind::NotRotationClosed:
      return "NotRotationClosed";
    case GroupErrorKind::Malformed:
      return "Malformed";
  }
  return "Unknown";
}

GroupError::GroupError(GroupErrorKind kind, const std::string& what, std::optional<std::size_t> generator,
                       std::optional<ExponentVector> witness)
    : std::invalid_argument(to_string(kind) + ": " + what),
      kind_(kind),
      generator_(generator),
      witness_(std::move(witness)) {}

namespace {

std::string vec_str(std::span<const std::uint64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Shape, residue range and SL condition. q itself is not judged here.
void check_generators(const DiagonalGroup& d) {
  if (d.m == 0) throw GroupError(GroupErrorKind::Malformed, "modulus m must be positive");
  if (d.q == 0) throw GroupError(GroupErrorKind::Malformed, "dimension q must be positive");
  for (std::size_t g = 0; g < d.generators.size(); ++g) {
    const auto& beta = d.generators[g];
    if (beta.size() != d.q)
      throw GroupError(GroupErrorKind::Malformed,
                       "generator " + std::to_string(g) + " has length " + std::to_string(beta.size()), g);
    detail::u128 sum = 0;
    for (std::uint64_t b : beta) {
      if (b >= d.m)
        throw GroupError(GroupErrorKind::Malformed,
                         "generator " + std::to_string(g) + " has a residue outside [0, m)", g);
      sum += b;
    }
    if (sum % d.m != 0)
      throw GroupError(GroupErrorKind::SLViolation,
                       "generator " + std::to_string(g) + " " + vec_str(beta) + " has coordinate sum not divisible by m",
                       g);
  }
}

IntMatrix stacked_lattice(const DiagonalGroup& d, std::span<const std::uint64_t> extra = {}) {
  const std::size_t rows = d.generators.size() + d.q + (extra.empty() ? 0 : 1);
  IntMatrix a(rows, d.q);
  std::size_t r = 0;
  auto put = [&](std::span<const std::uint64_t> v) {
    for (std::size_t c = 0; c < d.q; ++c) mpz_set_ui(a(r, c).get_mpz_t(), v[c]);
    ++r;
  };
  for (const auto& g : d.generators) put(g);
  for (std::size_t i = 0; i < d.q; ++i) {
    mpz_set_ui(a(r, i).get_mpz_t(), d.m);
    ++r;
  }
  if (!extra.empty()) put(extra);
  return a;
}

// [Z^q : L] for the full-rank lattice L spanned by the rows.
BigInt lattice_index(const IntMatrix& a) { return smith_normal_form(a).nonzero_product(); }

BigInt modulus_power(const DiagonalGroup& d) { return big_pow(BigInt(std::to_string(d.m)), d.q); }

}  // namespace

BigInt group_order(const DiagonalGroup& d) {
  check_generators(d);
  if (d.generators.empty()) return 1;
  const BigInt index = lattice_index(stacked_lattice(d));
  BigInt order;
  mpz_divexact(order.get_mpz_t(), modulus_power(d).get_mpz_t(), index.get_mpz_t());
  return order;
}

std::uint64_t element_cycle_order(const DiagonalGroup& d, std::span<const std::uint64_t> beta) {
  if (d.m == 0) throw std::invalid_argument("element_cycle_order: modulus must be positive");
  std::uint64_t g = d.m;
  for (std::uint64_t b : beta) {
    const std::uint64_t diff = (b % d.m + d.m - beta[0] % d.m) % d.m;
    g = std::gcd(g, diff);
  }
  return d.m / g;
}

ExponentVector conjugate_by_shift(std::span<const std::uint64_t> beta) {
  const std::size_t q = beta.size();
  ExponentVector out(q);
  for (std::size_t i = 0; i < q; ++i) out[(i + 1) % q] = beta[i];
  return out;
}

bool lattice_contains(const DiagonalGroup& d, std::span<const std::uint64_t> beta) {
  if (beta.size() != d.q) throw std::invalid_argument("lattice_contains: vector length differs from q");
  ExponentVector reduced(beta.begin(), beta.end());
  for (auto& b : reduced) b %= d.m;
  if (std::all_of(reduced.begin(), reduced.end(), [](std::uint64_t b) { return b == 0; })) return true;
  return lattice_index(stacked_lattice(d)) == lattice_index(stacked_lattice(d, reduced));
}

DiagonalGroup rotation_closure(const DiagonalGroup& d) {
  check_generators(d);
  DiagonalGroup out{d.q, d.m, {}};
  for (const auto& g : d.generators) {
    ExponentVector r = g;
    for (std::uint32_t k = 0; k < d.q; ++k) {
      out.generators.push_back(r);
      r = conjugate_by_shift(r);
    }
  }
  return out;
}

std::vector<ExponentVector> enumerate_elements(const DiagonalGroup& d, std::uint64_t limit) {
  const BigInt order = group_order(d);
  if (order > BigInt(std::to_string(limit))) throw std::length_error("enumerate_elements: group too large");
  std::vector<ExponentVector> out;
  std::set<ExponentVector> seen;
  std::deque<ExponentVector> frontier;
  ExponentVector zero(d.q, 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    ExponentVector v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : d.generators) {
      ExponentVector w(d.q);
      for (std::size_t i = 0; i < d.q; ++i) w[i] = static_cast<std::uint64_t>((static_cast<detail::u128>(v[i]) + g[i]) % d.m);
      if (seen.insert(w).second) frontier.push_back(std::move(w));
    }
    out.push_back(std::move(v));
  }
  return out;
}

MonomialGroup group_validate(const DiagonalGroup& candidate) {
  if (!is_prime(std::uint64_t{candidate.q}))
    throw GroupError(GroupErrorKind::NotPrime, "q = " + std::to_string(candidate.q) + " is not prime");
  if (candidate.q == 2) throw GroupError(GroupErrorKind::EvenDimension, "q = 2 is not an odd prime");
  check_generators(candidate);

  BigInt order = group_order(candidate);
  if (order <= BigInt(std::to_string(kEnumerationLimit))) {
    const auto elements = enumerate_elements(candidate);
    const std::set<ExponentVector> members(elements.begin(), elements.end());
    for (const auto& g : candidate.generators) {
      ExponentVector r = conjugate_by_shift(g);
      if (!members.contains(r))
        throw GroupError(GroupErrorKind::NotRotationClosed, "tau-conjugate " + vec_str(r) + " is not in D",
                         std::nullopt, r);
    }
  } else {
    for (const auto& g : candidate.generators) {
      ExponentVector r = conjugate_by_shift(g);
      if (!lattice_contains(candidate, r))
        throw GroupError(GroupErrorKind::NotRotationClosed, "tau-conjugate " + vec_str(r) + " is not in D",
                         std::nullopt, r);
    }
  }
  return MonomialGroup(candidate, std::move(order));
}

}  // namespace wexc
