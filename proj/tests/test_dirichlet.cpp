#include <doctest.h>

#include <random>

#include "ribbon/dirichlet.hpp"
#include "ribbon/factorization.hpp"
#include "ribbon/oracle.hpp"

using namespace ribbon;

namespace {

const std::vector<long> kPublishedR{
    1,       2,        3,        6,         10,        20,        36,        72,         135,
    272,     528,      1052,     2080,      4160,      8244,      16508,     32896,      65770,
    131328,  262632,   524744,   1049600,   2098176,   4196200,   8390620,   16781312,   33558291,
    67116944, 134225920, 268451240, 536887296, 1073774376, 2147515424};

const std::vector<long> kPublishedP{
    0,        0,         1,         2,         8,          10,        34,        56,       126,
    234,      526,       972,       2078,      4018,       8186,      16240,     32894,    65164,
    131326,   261544,    524530,    1047490,   2098174,    4191680,   8390520,   16772994, 33557508,
    67100304, 134225918, 268416590, 536887294, 1073708400, 2147512258};

std::vector<long> as_longs(const DirichletSeq& s) {
  std::vector<long> out;
  for (const auto& v : s.integer_coefficients()) out.push_back(v.get_si());
  return out;
}

DirichletSeq random_seq(std::size_t N, std::mt19937& rng, bool unit_lead) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  DirichletSeq s(N);
  for (std::size_t n = 1; n <= N; ++n) s[n] = mpq_class(num(rng), den(rng));
  if (unit_lead) s[1] = 1;
  else if (s[1] == 0) s[1] = mpq_class(3, 2);
  for (std::size_t n = 1; n <= N; ++n) s[n].canonicalize();
  return s;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("convolution") {
  const auto zeta = series_zeta(12);
  CHECK((zeta * zeta)[6] == 4);
  CHECK((zeta * zeta)[12] == 6);

  const auto CS = series_C(4) * series_S(4);
  CHECK(CS[4] == 16);

  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t N = 50;
    const auto a = random_seq(N, rng, false), b = random_seq(N, rng, false), c = random_seq(N, rng, false);
    CHECK(DirichletSeq::identity(N) * a == a);
    CHECK(a * DirichletSeq::identity(N) == a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
  CHECK_THROWS_AS(convolve(series_C(4), series_C(5)), BoundMismatch);
}

TEST_CASE("inversion") {
  CHECK(as_longs(invert(series_zeta(6))) == std::vector<long>{1, -1, -1, 0, -1, 1});
  CHECK(invert(series_R(4))[4] == -2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_seq(40, rng, trial % 2 == 0);
    CHECK(a * invert(a) == DirichletSeq::identity(40));
    CHECK(invert(invert(a)) == a);
  }
  DirichletSeq z(5);
  z[2] = 1;
  CHECK_THROWS_AS(invert(z), std::domain_error);
}

TEST_CASE("basic series") {
  CHECK(series_C(5)[5] == 16);
  CHECK(series_S(5)[5] == 4);
  CHECK(series_S(6)[6] == 8);
  CHECK(series_lexmin(9)[9] == 136);
}

TEST_CASE("integrality is asserted on extraction") {
  DirichletSeq s(3);
  s[1] = 1;
  s[2] = mpq_class(1, 2);
  CHECK_THROWS_WITH_AS(s.integer_coefficients(), doctest::Contains("n=2"), std::domain_error);
}

TEST_CASE("distinct ribbon Schur functions by size") {
  const auto R = series_R(33);
  CHECK(as_longs(R) == kPublishedR);
  CHECK(R[18] == 65770);

  const auto dec = series_R_decomposed(33);
  CHECK(dec.r == R);
  CHECK(dec.lcross[4] == 2);
  CHECK(dec.r1[1] == 0);
  CHECK(dec.r1[2] == 0);
}

TEST_CASE("formula agrees with exhaustive class counts") {
  const auto R = series_R(14);
  for (int n = 1; n <= 14; ++n) CHECK(R[static_cast<std::size_t>(n)] == brute_force_classes(n).size());
}

TEST_CASE("irreducible compositions") {
  const auto P = series_P(33), Pstar = series_Pstar(33), Pcross = series_Pcross(33);
  CHECK(as_longs(P) == kPublishedP);
  CHECK(P == Pstar + Pcross);
  CHECK(Pcross[4] == 2);
  CHECK(P[1] == 0);

  const auto R = series_R(33);
  for (std::size_t p = 2; p <= 33; ++p)
    if (is_prime(static_cast<long>(p))) CHECK(P[p] == R[p] - 2);

  // Counts are nonnegative integers.
  for (const auto* s : {&P, &Pstar, &Pcross})
    for (const auto& v : s->integer_coefficients()) CHECK(v >= 0);

  // Enumeration: irreducible normal forms split by symmetry.
  for (int n = 1; n <= 12; ++n) {
    long sym = 0, asym = 0;
    for (const auto& entry : brute_force_classes(n)) {
      if (!is_irreducible(entry.normal_form)) continue;
      (is_symmetric(entry.normal_form) ? sym : asym) += 1;
    }
    CHECK(Pstar[static_cast<std::size_t>(n)] == sym);
    CHECK(Pcross[static_cast<std::size_t>(n)] == asym);
  }
}

TEST_CASE("lex-minimal excess over class counts") {
  const std::map<std::size_t, long> table{{9, 1},    {12, 4},   {15, 12},  {16, 4},  {18, 22},
                                          {20, 24},  {21, 56},  {24, 152}, {25, 36}, {27, 237},
                                          {28, 112}, {30, 600}, {32, 216}, {33, 992}};
  const auto diff = series_lexmin(33) - series_R(33);
  for (std::size_t n = 1; n <= 33; ++n) {
    const auto it = table.find(n);
    CHECK(diff[n] == (it == table.end() ? 0 : it->second));
  }
}

TEST_CASE("refinement by asymmetric factors") {
  const std::size_t N = 33;
  CHECK(series_R_refined(N, 1) == series_R(N));
  CHECK(series_R_refined(N, 0) == series_S(N));
  CHECK(series_R_refined(N, 2) == series_C(N));

  // Coefficient n at z is the sum over normal forms of z^{asymmetric factors}.
  for (int z = -2; z <= 3; ++z) {
    const auto refined = series_R_refined(12, z);
    for (int n = 1; n <= 12; ++n) {
      mpz_class expected = 0;
      for (const auto& entry : brute_force_classes(n)) {
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), mpz_class(z).get_mpz_t(), count_asymmetric_factors(entry.normal_form));
        expected += term;
      }
      CHECK(refined[static_cast<std::size_t>(n)] == expected);
    }
  }
}
