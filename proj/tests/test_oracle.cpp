#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ribbon/factorization.hpp"
#include "ribbon/length_gf.hpp"
#include "ribbon/oracle.hpp"

using namespace ribbon;

TEST_CASE("h-fingerprints") {
  CHECK(h_fingerprint({2}) == HFingerprint{{{2}, 1}});
  CHECK(h_fingerprint({1, 1}) == HFingerprint{{{1, 1}, 1}, {{2}, -1}});
  CHECK(h_fingerprint({1, 3}) == HFingerprint{{{3, 1}, 1}, {{4}, -1}});
  CHECK(h_fingerprint({1, 3}) == h_fingerprint({3, 1}));
  // r_{121} = h_{211} - 2 h_{31} + h_4; the two (3,1) coarsenings add up.
  CHECK(h_fingerprint({1, 2, 1}) == HFingerprint{{{2, 1, 1}, 1}, {{3, 1}, -2}, {{4}, 1}});
  CHECK_FALSE(h_fingerprint({1, 3}) == h_fingerprint({2, 2}));
}

TEST_CASE("h-fingerprint structure") {
  for (int n = 1; n <= 12; ++n) {
    for_each_composition(n, [n](const Composition& a) {
      const HFingerprint fp = h_fingerprint(a);
      REQUIRE(fp == h_fingerprint(reverse(a)));
      REQUIRE(fp.size() <= std::size_t{1} << (a.length() - 1));
      Partition sorted(a.parts().begin(), a.parts().end());
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      REQUIRE(fp.at(sorted) == 1);
      REQUIRE(fp.at(Partition{n}) == ((a.length() - 1) % 2 ? -1 : 1));
      for (const auto& [lambda, c] : fp) {
        REQUIRE(std::accumulate(lambda.begin(), lambda.end(), Part{0}) == n);
        REQUIRE(std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()));
        REQUIRE(c != 0);
      }
    });
  }
}

TEST_CASE("brute-force classes") {
  CHECK(brute_force_classes(4).size() == 6);
  CHECK(brute_force_classes(9).size() == 135);
  const auto one = brute_force_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].normal_form == Composition{1});
  CHECK(one[0].size == 1);

  std::vector<Composition> four;
  for (const auto& e : brute_force_classes(4)) four.push_back(e.normal_form);
  CHECK(four == std::vector<Composition>{{1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 2}, {4}});

  for (int n = 1; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (const auto& e : brute_force_classes(n)) {
      total += e.size;
      CHECK(e.size == std::uint64_t{1} << count_asymmetric_factors(e.normal_form));
    }
    CHECK(total == std::uint64_t{1} << (n - 1));
  }
  CHECK_THROWS_AS(brute_force_classes(21), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_classes(5, OracleBudget{4, 4, 4}), BudgetExceeded);
}

TEST_CASE("worker count does not change results") {
  const auto serial = brute_force_classes(11, {}, 1);
  const auto parallel = brute_force_classes(11, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].normal_form == parallel[i].normal_form);
    CHECK(serial[i].size == parallel[i].size);
  }
  const auto a = cross_validate(10, {}, 1), b = cross_validate(10, {}, 3);
  CHECK(a.normal_form_groups == b.normal_form_groups);
  CHECK(a.fingerprint_groups == b.fingerprint_groups);
  CHECK(a.identical() == b.identical());
}

TEST_CASE("length histograms") {
  CHECK(brute_force_length_histogram(4) == LengthPoly{0, 1, 2, 2, 1});
  CHECK(brute_force_length_histogram(2) == LengthPoly{0, 1, 1});
  for (int n = 1; n <= 10; ++n)
    CHECK(brute_force_length_histogram(n).evaluate(1) == brute_force_classes(n).size());
  CHECK_THROWS_AS(brute_force_length_histogram(19), BudgetExceeded);
}

TEST_CASE("semantic partition equals normal-form partition") {
  for (int n = 1; n <= 9; ++n) {
    const auto report = cross_validate(n);
    CHECK(report.identical());
    CHECK(report.compositions == std::uint64_t{1} << (n - 1));
    CHECK(report.normal_form_groups == brute_force_classes(n).size());
  }
  CHECK(cross_validate(9).fingerprint_groups == 135);
  CHECK_THROWS_AS(cross_validate(17), BudgetExceeded);

  const HFingerprint fp = h_fingerprint({1, 2, 1, 3, 2});
  for (const auto& m : equivalence_class({1, 2, 1, 3, 2})) CHECK(h_fingerprint(m) == fp);
}

TEST_CASE("asymmetric-factor histogram matches the refined generating function") {
  for (int n = 1; n <= 14; ++n) CHECK(brute_force_refined_histogram(n) == poly_R_refined(n));
}
