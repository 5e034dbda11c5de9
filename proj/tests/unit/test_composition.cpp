#include "oracles.hpp"

#include "wexc/composition.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace wexc;

namespace {

using Exps = std::vector<std::uint32_t>;

// Rotation classes by brute force: group all compositions by the set of
// their rotations.
std::set<std::set<Exps>> brute_classes(std::uint32_t q, std::uint32_t d) {
  std::set<std::set<Exps>> classes;
  for (const auto& a : oracle::all_compositions(q, d)) {
    std::set<Exps> orbit;
    Exps cur = a;
    for (std::uint32_t i = 0; i < q; ++i) {
      orbit.insert(cur);
      cur = oracle::shift_monomial(cur);
    }
    classes.insert(orbit);
  }
  return classes;
}

}  // namespace

TEST_CASE("Composition basics") {
  const Composition a(Exps{1, 2, 0});
  CHECK(a.q() == 3);
  CHECK(a.weight() == 3);
  CHECK(a.rotated(1).exponents()[0] == 2);
  CHECK(a.rotated(1) == Composition(Exps{2, 0, 1}));
  CHECK(a.canonical() == Composition(Exps{2, 0, 1}));
  CHECK_FALSE(a.is_canonical());
  CHECK(a.symbol() == IntPoly{1, 2});
  CHECK(Composition(Exps{0, 4, 0}).is_single_variable());
  CHECK_FALSE(a.is_single_variable());
  CHECK_THROWS_AS(Composition(Exps{0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition(Exps{}), std::invalid_argument);
}

TEST_CASE("necklaces examples") {
  auto classes = necklaces(3, 2);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].representative == Composition(Exps{2, 0, 0}));
  CHECK(classes[1].representative == Composition(Exps{1, 1, 0}));
  CHECK(classes[0].class_size == 3);
  CHECK(classes[0].weight == 2);

  classes = necklaces(3, 1);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].representative == Composition(Exps{1, 0, 0}));

  classes = necklaces(7, 2);
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].representative == Composition(Exps{2, 0, 0, 0, 0, 0, 0}));
  CHECK(classes[1].representative == Composition(Exps{1, 1, 0, 0, 0, 0, 0}));
  CHECK(classes[2].representative == Composition(Exps{1, 0, 1, 0, 0, 0, 0}));
  CHECK(classes[3].representative == Composition(Exps{1, 0, 0, 1, 0, 0, 0}));

  CHECK_THROWS_AS(necklaces(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(necklaces(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(necklaces(9, 2), std::invalid_argument);
}

TEST_CASE("necklaces match brute-force rotation classes") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t d = 1; d < q; ++d) {
      const auto brute = brute_classes(q, d);
      const auto classes = necklaces(q, d);
      CHECK(classes.size() == brute.size());
      CHECK(BigInt(classes.size()) == necklace_count(q, d));
      std::set<std::set<Exps>> seen;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& rep = classes[i].representative;
        const Exps e(rep.exponents().begin(), rep.exponents().end());
        CHECK(rep.is_canonical());
        if (i > 0) CHECK(classes[i - 1].representative > rep);
        for (const auto& orbit : brute) {
          if (orbit.count(e)) {
            CHECK(orbit.size() == q);
            CHECK(*orbit.rbegin() == e);
            seen.insert(orbit);
          }
        }
      }
      CHECK(seen.size() == brute.size());
    }
  }
}

TEST_CASE("for_each_composition enumerates in descending order") {
  std::vector<Exps> seen;
  for_each_composition(4, 3, [&](std::span<const std::uint32_t> a) { seen.emplace_back(a.begin(), a.end()); });
  CHECK(seen.size() == 20);
  CHECK(seen.front() == Exps{3, 0, 0, 0});
  CHECK(seen.back() == Exps{0, 0, 0, 3});
  CHECK(std::is_sorted(seen.rbegin(), seen.rend()));
  auto brute = oracle::all_compositions(4, 3);
  std::sort(brute.rbegin(), brute.rend());
  CHECK(seen == brute);
}

TEST_CASE("necklace counts") {
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t d = 1; d < q; ++d) {
      const BigInt expected = binomial(d + q - 1, q - 1) / q;
      CHECK(binomial(d + q - 1, q - 1) % q == 0);
      CHECK(necklace_count(q, d) == expected);
      if (q <= 11) {
        std::uint64_t count = 0;
        for_each_necklace(q, d, [&](std::span<const std::uint32_t>) { ++count; });
        CHECK(BigInt(count) == expected);
      }
    }
  }
}

TEST_CASE("is_rotation_maximal") {
  CHECK(is_rotation_maximal(Exps{2, 0, 1}));
  CHECK_FALSE(is_rotation_maximal(Exps{0, 2, 1}));
  CHECK(is_rotation_maximal(Exps{1, 1, 1}));
}
