#include "ribbon/dirichlet.hpp"

#include <string>

namespace ribbon {
namespace {

void require_same_bound(const DirichletSeq& a, const DirichletSeq& b) {
  if (a.bound() != b.bound())
    throw BoundMismatch("Dirichlet series bounds differ: " + std::to_string(a.bound()) +
                        " vs " + std::to_string(b.bound()));
}

mpz_class pow2(std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

DirichletSeq::DirichletSeq(std::size_t bound) : coeffs_(bound + 1) {
  if (bound < 1) throw std::invalid_argument("Dirichlet series bound must be >= 1");
}

DirichletSeq::DirichletSeq(std::size_t bound, const std::vector<mpq_class>& coeffs)
    : DirichletSeq(bound) {
  if (coeffs.size() != bound) throw std::invalid_argument("coefficient count must equal bound");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin() + 1);
}

DirichletSeq DirichletSeq::identity(std::size_t bound) {
  DirichletSeq e(bound);
  e[1] = 1;
  return e;
}

std::vector<mpz_class> DirichletSeq::integer_coefficients() const {
  std::vector<mpz_class> out;
  out.reserve(bound());
  for (std::size_t n = 1; n <= bound(); ++n) {
    if (coeffs_[n].get_den() != 1)
      throw std::domain_error("non-integral coefficient at n=" + std::to_string(n) + ": " +
                              coeffs_[n].get_str());
    out.push_back(coeffs_[n].get_num());
  }
  return out;
}

DirichletSeq operator+(const DirichletSeq& a, const DirichletSeq& b) {
  require_same_bound(a, b);
  DirichletSeq c(a.bound());
  for (std::size_t n = 1; n <= a.bound(); ++n) c[n] = a[n] + b[n];
  return c;
}

DirichletSeq operator-(const DirichletSeq& a, const DirichletSeq& b) {
  require_same_bound(a, b);
  DirichletSeq c(a.bound());
  for (std::size_t n = 1; n <= a.bound(); ++n) c[n] = a[n] - b[n];
  return c;
}

DirichletSeq operator*(const mpq_class& k, const DirichletSeq& a) {
  DirichletSeq c(a.bound());
  for (std::size_t n = 1; n <= a.bound(); ++n) c[n] = k * a[n];
  return c;
}

DirichletSeq convolve(const DirichletSeq& a, const DirichletSeq& b) {
  require_same_bound(a, b);
  const std::size_t N = a.bound();
  DirichletSeq c(N);
  for (std::size_t d = 1; d <= N; ++d) {
    if (a[d] == 0) continue;
    for (std::size_t m = 1; d * m <= N; ++m) c[d * m] += a[d] * b[m];
  }
  return c;
}

DirichletSeq invert(const DirichletSeq& a) {
  if (a[1] == 0) throw std::domain_error("Dirichlet inverse requires a_1 != 0");
  const std::size_t N = a.bound();
  const mpq_class lead_inv = 1 / a[1];
  DirichletSeq b(N);
  b[1] = lead_inv;
  for (std::size_t n = 2; n <= N; ++n) {
    mpq_class acc = 0;
    for (std::size_t d = 2; d <= n; ++d)
      if (n % d == 0) acc += a[d] * b[n / d];
    b[n] = -lead_inv * acc;
  }
  return b;
}

DirichletSeq divide(const DirichletSeq& a, const DirichletSeq& b) { return convolve(a, invert(b)); }

DirichletSeq series_C(std::size_t bound) {
  DirichletSeq s(bound);
  for (std::size_t n = 1; n <= bound; ++n) s[n] = pow2(n - 1);
  return s;
}

DirichletSeq series_S(std::size_t bound) {
  DirichletSeq s(bound);
  for (std::size_t n = 1; n <= bound; ++n) s[n] = pow2(n / 2);
  return s;
}

DirichletSeq series_zeta(std::size_t bound) {
  DirichletSeq s(bound);
  for (std::size_t n = 1; n <= bound; ++n) s[n] = 1;
  return s;
}

DirichletSeq series_lexmin(std::size_t bound) {
  return mpq_class(1, 2) * (series_C(bound) + series_S(bound));
}

DirichletSeq series_R(std::size_t bound) {
  const auto C = series_C(bound);
  const auto S = series_S(bound);
  return divide(mpq_class(2) * convolve(C, S), C + S);
}

RDecomposition series_R_decomposed(std::size_t bound) {
  const auto C = series_C(bound);
  const auto S = series_S(bound);
  auto lcross = mpq_class(1, 2) * (C - S);
  auto r1 = divide(lcross, C);
  auto r = divide(S, DirichletSeq::identity(bound) - r1);
  return {std::move(lcross), std::move(r1), std::move(r)};
}

DirichletSeq series_P(std::size_t bound) {
  const auto e = DirichletSeq::identity(bound);
  return mpq_class(2) * invert(series_zeta(bound)) - e - invert(series_R(bound));
}

DirichletSeq series_Pstar(std::size_t bound) {
  const auto e = DirichletSeq::identity(bound);
  return mpq_class(2) * invert(series_zeta(bound)) - e - invert(series_S(bound));
}

DirichletSeq series_Pcross(std::size_t bound) {
  return invert(series_S(bound)) - invert(series_R(bound));
}

DirichletSeq series_R_refined(std::size_t bound, const mpq_class& z) {
  const auto C = series_C(bound);
  const auto S = series_S(bound);
  return divide(mpq_class(2) * convolve(C, S), mpq_class(2) * C - z * (C - S));
}

}  // namespace ribbon
