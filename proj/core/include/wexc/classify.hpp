// Candidate orders of the diagonal part for a prime dimension q.
//
// For a degree-d semi-invariant with exponent vector a, every element of D
// becomes scalar after |d * det M| steps, where M is the circulant with first
// row a. det M = d * Res(Phi_q, f_a), so the table records
// n = |Res(Phi_q, f_a)| for every rotation class of weight d in [2, q-1],
// drops n = 1, and keeps only the values not dividing another value of the
// same row (a divisor gives a weaker containment D in C_q x (C_(n d))^(q-1)).

#pragma once

#include "wexc/composition.hpp"
#include "wexc/exactmath.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wexc {

/// |Res(Phi_q, f_a)|, the absolute norm of f_a(zeta_q). Throws
/// std::invalid_argument unless q is prime, a has q parts and 0 < weight < q.
BigInt norm_of_composition(std::uint32_t q, const Composition& a);

struct TableEntry {
  BigInt n;
  Factorization factorization;
  /// First class representative (in enumeration order) with this norm.
  Composition witness;
};

struct ClassificationTable {
  std::uint32_t q = 0;
  /// Degree d in [2, q-1] -> entries sorted by n ascending.
  std::map<std::uint32_t, std::vector<TableEntry>> rows;
};

struct TableOptions {
  /// 0 = hardware concurrency.
  unsigned workers = 0;
  /// Cap on the total number of rotation classes enumerated.
  std::uint64_t class_budget = 100'000'000;
};

class TableBudgetExceeded : public std::length_error {
 public:
  TableBudgetExceeded(std::uint32_t q, std::uint32_t degree, const BigInt& classes_needed);
  /// Degree at which the running class count passed the budget.
  std::uint32_t degree() const noexcept { return degree_; }

 private:
  std::uint32_t degree_;
};

/// Throws std::invalid_argument unless q is an odd prime;
/// TableBudgetExceeded when the class budget would be exceeded.
ClassificationTable classification_table(std::uint32_t q, const TableOptions& options = {});

struct BoundReport {
  std::uint32_t q = 0;
  /// q^(2q+1), the bound on the cycle order modulo scalars.
  BigInt cycle_bound;
  /// q^(2q+2), the bound on any cyclic subgroup of D.
  BigInt cyclic_subgroup_bound;
  /// (q-1)!
  BigInt supergroup_index_factor;
  std::uint64_t entries_checked = 0;
  /// One line per failed check; empty when everything conforms.
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// For every entry: n <= d^(q-1), with equality exactly for single-variable
/// witnesses; d^2 n < q^(2q+1); q d^2 n <= q^(2q+2).
BoundReport bound_report(std::uint32_t q, const ClassificationTable& table);

}  // namespace wexc
