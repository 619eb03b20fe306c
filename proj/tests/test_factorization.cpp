#include <doctest.h>

#include <map>
#include <set>

#include "ribbon/composition.hpp"
#include "ribbon/factorization.hpp"

using namespace ribbon;

namespace {

using PairSet = std::set<std::pair<Composition, Composition>>;

// Every product b o c with |b||c| = n, b != (1), c != (1), bucketed by
// product. Independent of the split search.
std::map<Composition, PairSet> all_products(int n) {
  std::map<Composition, PairSet> out;
  for (int q = 2; q < n; ++q) {
    if (n % q) continue;
    for (const auto& c : enumerate_compositions(q))
      for (const auto& b : enumerate_compositions(n / q)) out[compose(b, c)].emplace(b, c);
  }
  return out;
}

PairSet as_set(const std::vector<SplitPair>& v) { return PairSet(v.begin(), v.end()); }

template <class F>
void for_sizes(int lo, int hi, F&& f) {
  for (int n = lo; n <= hi; ++n) for_each_composition(n, f);
}

}  // namespace

TEST_CASE("trivial pairs") {
  CHECK(is_trivial_pair({2}, {3}));
  CHECK(is_trivial_pair({1, 1}, {1, 1}));
  CHECK(is_trivial_pair({1}, {1, 3}));
  CHECK(is_trivial_pair({2, 1}, {1}));
  CHECK_FALSE(is_trivial_pair({1, 1}, {2}));
  CHECK_FALSE(is_trivial_pair({2}, {1, 1}));
}

TEST_CASE("split pairs on known examples") {
  CHECK(as_set(split_pairs({2, 2})) == PairSet{{{1, 1}, {2}}});
  CHECK(as_set(split_pairs({1, 2, 1})) == PairSet{{{2}, {1, 1}}});
  CHECK(as_set(split_pairs({1, 2, 2, 2, 1})) == PairSet{{{2}, {1, 2, 1}}, {{4}, {1, 1}}});
  CHECK(split_pairs({1, 3}).empty());
  CHECK(split_pairs({1}).empty());
  CHECK(split_pairs({5}).empty());
}

TEST_CASE("split pairs are exactly the inverse images of composition") {
  for (int n = 1; n <= 12; ++n) {
    const auto products = all_products(n);
    for_each_composition(n, [&](const Composition& a) {
      const auto splits = split_pairs(a);
      const auto it = products.find(a);
      const PairSet expected = it == products.end() ? PairSet{} : it->second;
      REQUIRE(as_set(splits) == expected);
      REQUIRE(splits.size() == expected.size());
    });
  }
}

TEST_CASE("atoms and irreducibles") {
  CHECK(is_atom({4}));
  CHECK(is_atom({1, 1, 1, 1}));
  CHECK_FALSE(is_atom({2, 2}));
  CHECK(is_atom({1}));

  CHECK(is_irreducible({1, 3}));
  CHECK(is_irreducible({1, 1, 2}));
  CHECK(is_irreducible({2, 1, 3}));
  CHECK_FALSE(is_irreducible({1, 1}));
  CHECK_FALSE(is_irreducible({4}));
  CHECK_FALSE(is_irreducible({1, 2, 1}));
}

TEST_CASE("irreducible normal forms of size 4 and 6") {
  auto irreducible_normal = [](int n) {
    std::set<Composition> out;
    for_each_composition(n, [&](const Composition& a) {
      if (is_irreducible(a) && normalize(a) == a) out.insert(a);
    });
    return out;
  };
  CHECK(irreducible_normal(4) == std::set<Composition>{{1, 3}, {1, 1, 2}});
  CHECK(irreducible_normal(6) == std::set<Composition>{{1, 5},
                                                       {1, 1, 4},
                                                       {1, 4, 1},
                                                       {1, 2, 3},
                                                       {2, 1, 3},
                                                       {1, 1, 1, 3},
                                                       {1, 1, 2, 2},
                                                       {1, 1, 3, 1},
                                                       {2, 1, 1, 2},
                                                       {1, 1, 1, 1, 2}});
}

TEST_CASE("irreducible factorization examples") {
  CHECK(irreducible_factorization({2, 2}) == Factorization{{1, 1}, {2}});
  CHECK(irreducible_factorization({1, 2, 2, 2, 1}) == Factorization{{4}, {1, 1}});
  CHECK(irreducible_factorization({1, 3}) == Factorization{{1, 3}});
  CHECK(irreducible_factorization({2, 3, 1, 2, 1}) == Factorization{{2, 1}, {2, 1}});
  CHECK(irreducible_factorization({1}) == Factorization{{1}});
  CHECK(irreducible_factorization({8}) == Factorization{{8}});
  CHECK(irreducible_factorization(Composition::ones(6)) == Factorization{Composition::ones(6)});
}

TEST_CASE("factorization invariants") {
  for_sizes(1, 12, [](const Composition& a) {
    const Factorization f = irreducible_factorization(a);
    REQUIRE(recompose(f) == a);
    if (!a.is_one())
      for (const auto& factor : f) REQUIRE_FALSE(factor.is_one());
    for (const auto& factor : f) REQUIRE(is_atom(factor));
    for (std::size_t i = 0; i + 1 < f.size(); ++i) REQUIRE_FALSE(is_trivial_pair(f[i], f[i + 1]));

    // Symmetric iff every factor is.
    const bool all_sym = std::all_of(f.begin(), f.end(), [](const Composition& c) { return is_symmetric(c); });
    REQUIRE(is_symmetric(a) == all_sym);

    // For asymmetric a, a < a* iff the last asymmetric factor is lex-smaller
    // than its reversal.
    if (!all_sym) {
      auto last = std::find_if(f.rbegin(), f.rend(), [](const Composition& c) { return !is_symmetric(c); });
      REQUIRE((a < reverse(a)) == (*last < reverse(*last)));
    }
  });
}

TEST_CASE("factorization does not depend on split exploration order") {
  for_sizes(1, 10, [](const Composition& a) {
    REQUIRE(irreducible_factorization(a, SplitOrder::first) == irreducible_factorization(a, SplitOrder::last));
  });
}

TEST_CASE("factorization of the reversal is the factorwise reversal") {
  for_sizes(1, 10, [](const Composition& a) {
    Factorization expected = irreducible_factorization(a);
    for (auto& f : expected) f = reverse(f);
    REQUIRE(irreducible_factorization(reverse(a)) == expected);
  });
}

TEST_CASE("normal forms") {
  CHECK(normalize({3, 1}) == Composition{1, 3});
  CHECK(normalize({2, 3, 1, 2, 1}) == Composition{1, 2, 1, 3, 2});
  CHECK(normalize({1, 2, 1}) == Composition{1, 2, 1});
  for_sizes(1, 10, [](const Composition& a) {
    const Composition nf = normalize(a);
    REQUIRE(normalize(nf) == nf);
    REQUIRE(normalize(reverse(a)) == nf);
    REQUIRE(nf.size() == a.size());
    REQUIRE(nf.length() == a.length());
  });
}

TEST_CASE("equivalence") {
  CHECK(equivalent({1, 2, 1, 3, 2}, {1, 3, 2, 1, 2}));
  CHECK_FALSE(equivalent({1, 3}, {2, 2}));
  CHECK_FALSE(equivalent({1, 3}, {1, 4}));
  for_sizes(1, 10, [](const Composition& a) { REQUIRE(equivalent(a, reverse(a))); });
}

TEST_CASE("equivalence classes") {
  CHECK(equivalence_class({1, 2, 1}) == std::vector<Composition>{{1, 2, 1}});
  CHECK(equivalence_class({1, 3}) == std::vector<Composition>{{1, 3}, {3, 1}});
  CHECK(equivalence_class({1, 2, 1, 3, 2}) ==
        std::vector<Composition>{{1, 2, 1, 3, 2}, {1, 3, 2, 1, 2}, {2, 1, 2, 3, 1}, {2, 3, 1, 2, 1}});

  CHECK(count_asymmetric_factors({1, 2, 1}) == 0);
  CHECK(count_asymmetric_factors({1, 3}) == 1);
  CHECK(count_asymmetric_factors({1, 2, 1, 3, 2}) == 2);

  for (int n = 1; n <= 12; ++n) {
    std::uint64_t covered = 0;
    std::set<Composition> normal_forms;
    for_each_composition(n, [&](const Composition& a) {
      const auto cls = equivalence_class(a);
      REQUIRE(cls.size() == std::size_t{1} << count_asymmetric_factors(a));
      REQUIRE(std::binary_search(cls.begin(), cls.end(), a));
      if (normal_forms.insert(normalize(a)).second) covered += cls.size();
    });
    CHECK(covered == std::uint64_t{1} << (n - 1));
  }

  // Every member shares the normal form.
  for_sizes(1, 9, [](const Composition& a) {
    const Composition nf = normalize(a);
    for (const auto& m : equivalence_class(a)) REQUIRE(normalize(m) == nf);
  });
}

TEST_CASE("cache does not change results") {
  std::vector<Composition> cold;
  clear_factorization_cache();
  for_each_composition(9, [&](const Composition& a) { cold.push_back(normalize(a)); });
  std::size_t i = 0;
  for_each_composition(9, [&](const Composition& a) { CHECK(normalize(a) == cold[i++]); });
}
