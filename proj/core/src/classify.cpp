#include "wexc/classify.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wexc {

namespace {

void require_norm_domain(std::uint32_t q, const Composition& a) {
  if (!is_prime(std::uint64_t{q})) throw std::invalid_argument("norm_of_composition: q must be prime");
  if (a.q() != q) throw std::invalid_argument("norm_of_composition: composition length differs from q");
  if (a.weight() >= q) throw std::invalid_argument("norm_of_composition: weight must be below q");
}

BigInt norm_with(const IntPoly& phi, std::span<const std::uint32_t> a) {
  std::vector<BigInt> coeffs(a.begin(), a.end());
  return abs(resultant(phi, IntPoly(std::move(coeffs))));
}

// Proper divisors of the factored value, excluding 1.
void for_each_proper_divisor(const Factorization& f, const std::function<void(const BigInt&)>& visit) {
  const BigInt whole = f.value();
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& pp : f.pairs) {
    const std::size_t base = divisors.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  for (const auto& d : divisors)
    if (d != 1 && d != whole) visit(d);
}

struct Candidate {
  std::size_t first_index;
  Factorization factorization;
  bool dominated = false;
};

}  // namespace

BigInt norm_of_composition(std::uint32_t q, const Composition& a) {
  require_norm_domain(q, a);
  return norm_with(cyclotomic_poly(q), a.exponents());
}

TableBudgetExceeded::TableBudgetExceeded(std::uint32_t q, std::uint32_t degree, const BigInt& classes_needed)
    : std::length_error("classification table for q = " + std::to_string(q) + " stopped at d = " +
                        std::to_string(degree) + ": " + classes_needed.get_str() +
                        " rotation classes exceed the budget"),
      degree_(degree) {}

ClassificationTable classification_table(std::uint32_t q, const TableOptions& options) {
  if (q < 3 || !is_prime(std::uint64_t{q}))
    throw std::invalid_argument("classification_table: q must be an odd prime, got " + std::to_string(q));

  BigInt running = 0;
  const BigInt budget(std::to_string(options.class_budget));
  for (std::uint32_t d = 2; d < q; ++d) {
    running += necklace_count(q, d);
    if (running > budget) throw TableBudgetExceeded(q, d, running);
  }

  const IntPoly phi = cyclotomic_poly(q);
  ClassificationTable table;
  table.q = q;
  for (std::uint32_t d = 2; d < q; ++d) {
    std::vector<std::uint32_t> reps;
    for_each_necklace(q, d, [&](std::span<const std::uint32_t> a) { reps.insert(reps.end(), a.begin(), a.end()); });
    const std::size_t count = reps.size() / q;

    // Each chunk records the first index at which every norm value appears;
    // merging by minimum index keeps the result independent of scheduling.
    std::vector<std::map<BigInt, std::size_t>> partial(detail::resolve_workers(options.workers));
    const std::size_t chunks =
        detail::parallel_chunks(count, options.workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
          auto& seen = partial[chunk];
          for (std::size_t k = begin; k < end; ++k) {
            BigInt n = norm_with(phi, std::span<const std::uint32_t>(reps.data() + k * q, q));
            if (n == 1) continue;
            seen.emplace(std::move(n), k);  // keeps the earlier index
          }
        });

    std::map<BigInt, Candidate> values;
    for (std::size_t c = 0; c < chunks; ++c) {
      for (auto& [n, k] : partial[c]) {
        auto [it, inserted] = values.try_emplace(n, Candidate{k, {}, false});
        if (!inserted) it->second.first_index = std::min(it->second.first_index, k);
      }
    }
    partial.clear();

    // n is subsumed when it properly divides another value of the row.
    for (auto& [n, cand] : values) cand.factorization = factorize(n);
    for (const auto& [n, cand] : values) {
      for_each_proper_divisor(cand.factorization, [&](const BigInt& div) {
        auto it = values.find(div);
        if (it != values.end()) it->second.dominated = true;
      });
    }

    auto& row = table.rows[d];
    for (auto& [n, cand] : values) {
      if (cand.dominated) continue;
      const auto* base = reps.data() + cand.first_index * q;
      row.push_back({n, std::move(cand.factorization), Composition(std::vector<std::uint32_t>(base, base + q))});
    }
  }
  return table;
}

BoundReport bound_report(std::uint32_t q, const ClassificationTable& table) {
  BoundReport r;
  r.q = q;
  const BigInt bq(q);
  r.cycle_bound = big_pow(bq, 2 * std::uint64_t{q} + 1);
  r.cyclic_subgroup_bound = big_pow(bq, 2 * std::uint64_t{q} + 2);
  r.supergroup_index_factor = factorial(q - 1);
  if (table.q != q) r.violations.push_back("table was generated for q = " + std::to_string(table.q));

  for (const auto& [d, entries] : table.rows) {
    const BigInt bd(d);
    const BigInt eigen_bound = big_pow(bd, q - 1);
    for (const auto& e : entries) {
      ++r.entries_checked;
      const std::string where = "d=" + std::to_string(d) + " n=" + e.n.get_str() + ": ";
      const BigInt dd_n = bd * bd * e.n;
      if (e.n > eigen_bound) r.violations.push_back(where + "n exceeds d^(q-1)");
      if ((e.n == eigen_bound) != e.witness.is_single_variable())
        r.violations.push_back(where + "n = d^(q-1) must hold exactly for single-variable witnesses");
      if (!(dd_n < r.cycle_bound)) r.violations.push_back(where + "d^2 n is not below q^(2q+1)");
      if (bq * dd_n > r.cyclic_subgroup_bound) r.violations.push_back(where + "q d^2 n exceeds q^(2q+2)");
    }
  }
  return r;
}

}  // namespace wexc
