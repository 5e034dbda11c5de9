#include "wexc/semiinv.hpp"

#include "wide.hpp"
#include "parallel.hpp"

#include <limits>
#include <stdexcept>

namespace wexc {

namespace {

std::uint64_t character_at(std::span<const std::uint32_t> a, const ExponentVector& beta, std::size_t shift,
                           std::uint64_t m) {
  const std::size_t q = a.size();
  detail::u128 acc = 0;
  for (std::size_t j = 0; j < q; ++j) acc += static_cast<detail::u128>(a[j]) * beta[(j + shift) % q];
  return static_cast<std::uint64_t>(acc % m);
}

bool constant_orbit(const DiagonalGroup& d, std::span<const std::uint32_t> a) {
  for (const auto& beta : d.generators) {
    const std::uint64_t c0 = character_at(a, beta, 0, d.m);
    for (std::size_t i = 1; i < d.q; ++i)
      if (character_at(a, beta, i, d.m) != c0) return false;
  }
  return true;
}

void check_dimension(const DiagonalGroup& d, const Composition& a) {
  if (a.q() != d.q)
    throw std::invalid_argument("composition has " + std::to_string(a.q()) + " parts but q = " + std::to_string(d.q));
}

}  // namespace

std::vector<std::vector<std::uint64_t>> orbit_characters(const DiagonalGroup& d, const Composition& a) {
  check_dimension(d, a);
  if (d.m == 0) throw std::invalid_argument("orbit_characters: modulus must be positive");
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(d.generators.size());
  for (const auto& beta : d.generators) {
    std::vector<std::uint64_t> row(d.q);
    for (std::size_t i = 0; i < d.q; ++i) row[i] = character_at(a.exponents(), beta, i, d.m);
    out.push_back(std::move(row));
  }
  return out;
}

bool is_semi_invariant_orbit(const DiagonalGroup& d, const Composition& a) {
  check_dimension(d, a);
  if (d.m == 0) throw std::invalid_argument("is_semi_invariant_orbit: modulus must be positive");
  return constant_orbit(d, a.exponents());
}

std::optional<SemiInvariantWitness> find_semi_invariant(const MonomialGroup& g, std::uint32_t max_degree,
                                                        unsigned workers) {
  const DiagonalGroup& d = g.diagonal();
  if (max_degree >= d.q)
    throw std::invalid_argument("find_semi_invariant: max_degree must be below q = " + std::to_string(d.q));

  for (std::uint32_t weight = 1; weight <= max_degree; ++weight) {
    std::vector<std::uint32_t> reps;  // flattened, q entries per class
    for_each_necklace(d.q, weight, [&](std::span<const std::uint32_t> a) {
      // A constant vector would have a non-free orbit; impossible for d < q.
      reps.insert(reps.end(), a.begin(), a.end());
    });
    const std::size_t count = reps.size() / d.q;
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> first_hit(detail::resolve_workers(workers), kNone);
    detail::parallel_chunks(count, workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        if (constant_orbit(d, std::span<const std::uint32_t>(reps.data() + k * d.q, d.q))) {
          first_hit[chunk] = k;
          return;
        }
      }
    });
    std::size_t best = kNone;
    for (std::size_t k : first_hit) best = std::min(best, k);
    if (best == kNone) continue;

    Composition a(std::vector<std::uint32_t>(reps.begin() + best * d.q, reps.begin() + (best + 1) * d.q));
    SemiInvariantWitness w{a, weight, {}};
    for (const auto& row : orbit_characters(d, a)) w.character.push_back(row.front());
    return w;
  }
  return std::nullopt;
}

Verdict weak_exceptionality_verdict(const MonomialGroup& g, unsigned workers) {
  Verdict v;
  v.witness = find_semi_invariant(g, g.q() - 1, workers);
  v.weakly_exceptional = !v.witness.has_value();
  v.diagonal_order = g.diagonal_order();
  v.group_order = g.order();
  v.supergroup_index_factor = factorial(g.q() - 1);
  v.supergroup_order_bound = v.supergroup_index_factor * v.group_order;
  return v;
}

}  // namespace wexc
