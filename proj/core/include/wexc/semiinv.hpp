// Semi-invariants of D x| <tau> and the weak-exceptionality verdict.
//
// A semi-invariant of degree d < q splits into D-character-homogeneous
// monomial parts permuted by tau, so one exists iff some tau-orbit of
// monomials has a single D-character. For a monomial with exponents a and a
// generator beta, the monomial tau^i(x^a) has character exponent
// a . rot^i(beta) mod m, where rot^i(beta)_j = beta_(j+i). When these agree
// for all i, the orbit sum x^a + l tau(x^a) + ... + l^(q-1) tau^(q-1)(x^a) is
// a semi-invariant for every q-th root of unity l.

#pragma once

#include "wexc/composition.hpp"
#include "wexc/monomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wexc {

/// For each generator beta, the q residues a . rot^i(beta) mod m,
/// i = 0..q-1. Throws std::invalid_argument if a.q() != d.q.
std::vector<std::vector<std::uint64_t>> orbit_characters(const DiagonalGroup& d, const Composition& a);

/// Whether every generator sees one character across the tau-orbit of x^a.
bool is_semi_invariant_orbit(const DiagonalGroup& d, const Composition& a);

struct SemiInvariantWitness {
  Composition composition;
  std::uint32_t degree = 0;
  /// The common residue attained for each generator.
  std::vector<std::uint64_t> character;
};

/// Scans rotation classes of weight 1..max_degree (weight ascending, then
/// representatives in descending lexicographic order) and returns the first
/// constant-character orbit. workers = 0 uses the hardware concurrency; the
/// returned witness does not depend on it. Throws std::invalid_argument if
/// max_degree >= q.
std::optional<SemiInvariantWitness> find_semi_invariant(const MonomialGroup& g, std::uint32_t max_degree,
                                                        unsigned workers = 1);

struct Verdict {
  bool weakly_exceptional = false;
  /// Present exactly when not weakly exceptional.
  std::optional<SemiInvariantWitness> witness;
  BigInt diagonal_order;
  BigInt group_order;
  /// (q-1)!, the bound on [Gamma : G] for a monomial Gamma containing G.
  BigInt supergroup_index_factor;
  /// (q-1)! |G|
  BigInt supergroup_order_bound;
};

/// Only meaningful for the D x| C_q shape. Validation errors propagate as
/// GroupError.
Verdict weak_exceptionality_verdict(const MonomialGroup& g, unsigned workers = 1);

}  // namespace wexc
