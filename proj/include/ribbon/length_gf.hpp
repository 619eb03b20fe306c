#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

/// Exact integer Laurent polynomial in x, where x marks the length of a
/// composition. Counting polynomials have exponents in [1, n]; negative
/// exponents only appear in intermediate quotients like C_d(x)/x^d.
class LengthPoly {
 public:
  LengthPoly() = default;
  /// sum_i coeffs[i] x^i
  explicit LengthPoly(const std::vector<mpz_class>& coeffs);
  LengthPoly(std::initializer_list<long> coeffs);

  static LengthPoly monomial(const mpz_class& c, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// No nonzero coefficient at a negative exponent.
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  long min_exponent() const;
  long max_exponent() const;
  mpz_class coeff(long exponent) const;

  /// Coefficients of x^0 .. x^max. Throws std::domain_error for Laurent
  /// polynomials with negative exponents.
  std::vector<mpz_class> coefficients() const;

  /// x -> x^d, d >= 1.
  LengthPoly substitute_power(long d) const;
  /// Multiplication by x^k (k may be negative).
  LengthPoly shifted(long k) const;
  /// Exact division by x^d. Throws InexactDivision if the quotient would have
  /// a negative exponent.
  LengthPoly divide_by_x_power(long d) const;

  mpz_class evaluate(const mpz_class& x) const;

  bool operator==(const LengthPoly&) const = default;
  LengthPoly& operator+=(const LengthPoly& o);
  LengthPoly& operator-=(const LengthPoly& o);

  std::string to_string() const;

 private:
  void trim();

  long low_ = 0;  // exponent of coeffs_[0]
  std::vector<mpz_class> coeffs_;
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

LengthPoly operator+(LengthPoly a, const LengthPoly& b);
LengthPoly operator-(LengthPoly a, const LengthPoly& b);
LengthPoly operator-(const LengthPoly& a);
LengthPoly operator*(const LengthPoly& a, const LengthPoly& b);
LengthPoly operator*(const mpz_class& k, const LengthPoly& a);

/// Size-indexed family of polynomials; entry 0 is unused.
using PolySeq = std::vector<LengthPoly>;

/// x(1+x)^{n-1}: all compositions of n.
LengthPoly poly_C(long n);
/// Symmetric compositions of n.
LengthPoly poly_S(long n);
/// (C_n - S_n)/2: asymmetric lexicographically minimal compositions of n.
LengthPoly poly_Lcross(long n);

/// R1_1..R1_n by the recursion L^x_n = sum_{d|n} C_d(x) R1_{n/d}(x^d) / x^d.
PolySeq table_R1_recursive(long n);
/// R_1..R_n by R_n = S_n + sum_{d|n, d<n} R_d(x) R1_{n/d}(x^d) / x^d.
PolySeq table_R_recursive(long n);

LengthPoly poly_R1_recursive(long n);
/// Normal forms of size n by length.
LengthPoly poly_R_recursive(long n);

/// Signed sum over strict divisor chains 1 = d_0 | ... | d_k | n.
LengthPoly poly_R1_explicit(long n);
/// Sum over strict divisor chains d_1 | ... | d_{k+1} = n.
LengthPoly poly_R_explicit(long n);

/// Given A and B with B_1 = 1 and A_n = sum_{d|n} B_d(x) C_{n/d}(x^d),
/// returns C_1..C_n from the explicit chain formula. Inputs are indexed
/// 1..n (entry 0 ignored).
PolySeq generic_inverse_solveC(const PolySeq& A, const PolySeq& B, long n);

/// Given B and C with A_n = B_n + sum_{d|n, d<n} A_d(x) C_{n/d}(x^d),
/// returns A_1..A_n from the explicit chain formula.
PolySeq generic_inverse_solveA(const PolySeq& B, const PolySeq& C, long n);

/// Sparse polynomial in x (length) and z (asymmetric irreducible factors).
class BiPoly {
 public:
  using Key = std::pair<long, long>;  // (x exponent, z exponent)

  void add(long x_exp, long z_exp, const mpz_class& c);
  /// this += z^k * p(x)
  void add_scaled(const LengthPoly& p, long z_exp);

  mpz_class coeff(long x_exp, long z_exp) const;
  const std::map<Key, mpz_class>& terms() const { return terms_; }
  long max_z() const;

  /// Substitutes a value for z.
  LengthPoly at_z(const mpz_class& z) const;

  bool operator==(const BiPoly&) const = default;

 private:
  std::map<Key, mpz_class> terms_;
};

/// R_n(x, z) via the chain sum with every summand weighted by z^k.
BiPoly poly_R_refined(long n);
/// R_n(x, z) via the recursion with each R1 factor weighted by z.
BiPoly poly_R_refined_recursive(long n);

}  // namespace ribbon
