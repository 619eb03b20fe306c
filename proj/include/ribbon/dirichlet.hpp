#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ribbon {

/// Truncated Dirichlet series a_1 n^{-s} + ... + a_N N^{-s} with exact
/// rational coefficients. Products are Dirichlet convolutions.
class DirichletSeq {
 public:
  explicit DirichletSeq(std::size_t bound);
  DirichletSeq(std::size_t bound, const std::vector<mpq_class>& coeffs);

  std::size_t bound() const { return coeffs_.size() - 1; }

  /// 1-based coefficient access.
  const mpq_class& operator[](std::size_t n) const { return coeffs_.at(n); }
  mpq_class& operator[](std::size_t n) { return coeffs_.at(n); }

  /// The convolution identity: 1 at n = 1, zero elsewhere.
  static DirichletSeq identity(std::size_t bound);

  /// Coefficients a_1..a_N as integers. Throws std::domain_error naming the
  /// first non-integral index.
  std::vector<mpz_class> integer_coefficients() const;

  bool operator==(const DirichletSeq&) const = default;

 private:
  std::vector<mpq_class> coeffs_;  // index 0 unused
};

class BoundMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DirichletSeq operator+(const DirichletSeq& a, const DirichletSeq& b);
DirichletSeq operator-(const DirichletSeq& a, const DirichletSeq& b);
DirichletSeq operator*(const mpq_class& k, const DirichletSeq& a);

/// c_n = sum over d | n of a_d b_{n/d}.
DirichletSeq convolve(const DirichletSeq& a, const DirichletSeq& b);
inline DirichletSeq operator*(const DirichletSeq& a, const DirichletSeq& b) { return convolve(a, b); }

/// Convolution inverse via b_1 = 1/a_1, b_n = -(1/a_1) sum_{d|n, d>1} a_d b_{n/d}.
/// Throws std::domain_error if a_1 == 0.
DirichletSeq invert(const DirichletSeq& a);

/// a / b := a * invert(b)
DirichletSeq divide(const DirichletSeq& a, const DirichletSeq& b);

// Generating series of compositions by size.

/// 2^{n-1}: all compositions.
DirichletSeq series_C(std::size_t bound);
/// 2^{floor(n/2)}: symmetric compositions.
DirichletSeq series_S(std::size_t bound);
/// 1 for every n.
DirichletSeq series_zeta(std::size_t bound);
/// (2^{n-1} + 2^{floor(n/2)}) / 2: lexicographically minimal compositions.
DirichletSeq series_lexmin(std::size_t bound);

/// Distinct ribbon Schur functions by size: 2CS / (C + S).
DirichletSeq series_R(std::size_t bound);

/// The same sequence assembled along the set decomposition
/// Lx = (C - S)/2, R1 = Lx / C, R = S / (e - R1).
struct RDecomposition {
  DirichletSeq lcross;  // asymmetric lex-minimal compositions
  DirichletSeq r1;      // normal forms: one asymmetric factor, then symmetric ones
  DirichletSeq r;
};
RDecomposition series_R_decomposed(std::size_t bound);

/// Normalised irreducible compositions: 2 zeta^{-1} - e - R^{-1}.
DirichletSeq series_P(std::size_t bound);
/// Symmetric irreducible compositions: 2 zeta^{-1} - e - S^{-1}.
DirichletSeq series_Pstar(std::size_t bound);
/// Asymmetric normalised irreducible compositions: S^{-1} - R^{-1}.
DirichletSeq series_Pcross(std::size_t bound);

/// sum over normal forms rho of size n of z^{(asymmetric factors of rho)}:
/// 2CS / (2C - z(C - S)).
DirichletSeq series_R_refined(std::size_t bound, const mpq_class& z);

}  // namespace ribbon
