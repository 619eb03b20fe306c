#include "ribbon/length_gf.hpp"

#include <algorithm>
#include <functional>

namespace ribbon {
namespace {

LengthPoly power(const LengthPoly& base, long e) {
  LengthPoly out{1};
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

void require_size(long n) {
  if (n < 1) throw std::invalid_argument("size must be >= 1");
}

}  // namespace

LengthPoly::LengthPoly(const std::vector<mpz_class>& coeffs) : coeffs_(coeffs) { trim(); }

LengthPoly::LengthPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

LengthPoly LengthPoly::monomial(const mpz_class& c, long exponent) {
  LengthPoly p;
  p.low_ = exponent;
  p.coeffs_.push_back(c);
  p.trim();
  return p;
}

void LengthPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

long LengthPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return low_;
}

long LengthPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return low_ + static_cast<long>(coeffs_.size()) - 1;
}

mpz_class LengthPoly::coeff(long e) const {
  if (e < low_ || e >= low_ + static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<mpz_class> LengthPoly::coefficients() const {
  if (!is_polynomial()) throw std::domain_error("Laurent polynomial has negative exponents: " + to_string());
  if (is_zero()) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(low_), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

LengthPoly LengthPoly::substitute_power(long d) const {
  if (d < 1) throw std::invalid_argument("substitute_power requires d >= 1");
  if (is_zero()) return {};
  LengthPoly out;
  out.low_ = low_ * d;
  out.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * static_cast<std::size_t>(d)] = coeffs_[i];
  return out;
}

LengthPoly LengthPoly::shifted(long k) const {
  LengthPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LengthPoly LengthPoly::divide_by_x_power(long d) const {
  if (is_zero()) return {};
  if (low_ < d)
    throw InexactDivision("x^" + std::to_string(d) + " does not divide " + to_string());
  return shifted(-d);
}

mpz_class LengthPoly::evaluate(const mpz_class& x) const {
  if (is_zero()) return 0;
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (low_ >= 0) {
    mpz_class xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(low_));
    return acc * xp;
  }
  if (x != 1 && x != -1) throw std::domain_error("Laurent evaluation only supported at x = +-1");
  return (x == -1 && (-low_) % 2 == 1) ? mpz_class(-acc) : acc;
}

LengthPoly& LengthPoly::operator+=(const LengthPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(max_exponent(), o.max_exponent());
  std::vector<mpz_class> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) sum[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LengthPoly& LengthPoly::operator-=(const LengthPoly& o) { return *this += -o; }

std::string LengthPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const long e = low_ + static_cast<long>(i);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const mpz_class mag = abs(c);
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e != 0) out += e == 1 ? "x" : "x^" + std::to_string(e);
  }
  return out;
}

LengthPoly operator+(LengthPoly a, const LengthPoly& b) { return a += b; }
LengthPoly operator-(LengthPoly a, const LengthPoly& b) { return a -= b; }
LengthPoly operator-(const LengthPoly& a) { return mpz_class(-1) * a; }

LengthPoly operator*(const mpz_class& k, const LengthPoly& a) {
  if (a.is_zero() || k == 0) return {};
  LengthPoly out;
  for (long e = a.min_exponent(); e <= a.max_exponent(); ++e)
    if (auto c = a.coeff(e); c != 0) out += LengthPoly::monomial(k * c, e);
  return out;
}

LengthPoly operator*(const LengthPoly& a, const LengthPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const long alo = a.min_exponent(), ahi = a.max_exponent();
  const long blo = b.min_exponent(), bhi = b.max_exponent();
  std::vector<mpz_class> prod(static_cast<std::size_t>(ahi - alo + bhi - blo + 1), 0);
  for (long i = alo; i <= ahi; ++i) {
    const mpz_class ai = a.coeff(i);
    if (ai == 0) continue;
    for (long j = blo; j <= bhi; ++j) prod[static_cast<std::size_t>(i - alo + j - blo)] += ai * b.coeff(j);
  }
  return LengthPoly(prod).shifted(alo + blo);
}

LengthPoly poly_C(long n) {
  require_size(n);
  return LengthPoly{0, 1} * power(LengthPoly{1, 1}, n - 1);
}

LengthPoly poly_S(long n) {
  require_size(n);
  const LengthPoly x{0, 1};
  const LengthPoly one_plus_x2{1, 0, 1};
  if (n % 2 == 0) return x * LengthPoly{1, 1} * power(one_plus_x2, (n - 2) / 2);
  return x * power(one_plus_x2, (n - 1) / 2);
}

LengthPoly poly_Lcross(long n) {
  const LengthPoly twice = poly_C(n) - poly_S(n);
  std::vector<mpz_class> half = twice.coefficients();
  for (auto& c : half) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) throw std::domain_error("C_n - S_n has an odd coefficient");
    c /= 2;
  }
  return LengthPoly(half);
}

PolySeq table_R1_recursive(long n) {
  require_size(n);
  PolySeq r1(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    // The d = 1 summand is C_1(x)/x * R1_m(x) = R1_m(x).
    LengthPoly acc = poly_Lcross(m);
    for (long d : divisors(m)) {
      if (d == 1) continue;
      acc -= (poly_C(d) * r1[static_cast<std::size_t>(m / d)].substitute_power(d)).divide_by_x_power(d);
    }
    r1[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return r1;
}

PolySeq table_R_recursive(long n) {
  const PolySeq r1 = table_R1_recursive(n);
  PolySeq r(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    LengthPoly acc = poly_S(m);
    for (long d : divisors(m)) {
      if (d == m) continue;
      acc += (r[static_cast<std::size_t>(d)] * r1[static_cast<std::size_t>(m / d)].substitute_power(d))
                 .divide_by_x_power(d);
    }
    r[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return r;
}

LengthPoly poly_R1_recursive(long n) { return table_R1_recursive(n)[static_cast<std::size_t>(n)]; }
LengthPoly poly_R_recursive(long n) { return table_R_recursive(n)[static_cast<std::size_t>(n)]; }

namespace {

void require_inputs(const PolySeq& s, long n, const char* name) {
  if (static_cast<long>(s.size()) <= n)
    throw std::invalid_argument(std::string(name) + " must be defined for sizes 1.." + std::to_string(n));
}

// Strict chains 1 = d_0 | d_1 | ... | d_k | target, visited depth-first.
// `visit(d_k, k, product)` receives the product of B_{d_{i+1}/d_i}(x^{d_i}).
void for_each_lower_chain(long target, const PolySeq& B,
                          const std::function<void(long, long, const LengthPoly&)>& visit) {
  std::function<void(long, long, const LengthPoly&)> walk = [&](long d, long k, const LengthPoly& prod) {
    visit(d, k, prod);
    for (long m = 2 * d; m <= target; m += d) {
      if (target % m != 0) continue;
      walk(m, k + 1, prod * B[static_cast<std::size_t>(m / d)].substitute_power(d));
    }
  };
  walk(1, 0, LengthPoly{1});
}

// Strict chains d_1 | ... | d_{k+1} = target; `visit(k, product)` receives
// B_{d_1}(x) times the product of C_{d_{i+1}/d_i}(x^{d_i}).
void for_each_upper_chain(long target, const PolySeq& B, const PolySeq& C,
                          const std::function<void(long, const LengthPoly&)>& visit) {
  std::function<void(long, long, const LengthPoly&)> walk = [&](long d, long k, const LengthPoly& prod) {
    if (d == target) {
      visit(k, prod);
      return;
    }
    for (long m = 2 * d; m <= target; m += d) {
      if (target % m != 0) continue;
      walk(m, k + 1, prod * C[static_cast<std::size_t>(m / d)].substitute_power(d));
    }
  };
  for (long d1 : divisors(target)) walk(d1, 0, B[static_cast<std::size_t>(d1)]);
}

}  // namespace

PolySeq generic_inverse_solveC(const PolySeq& A, const PolySeq& B, long n) {
  require_size(n);
  require_inputs(A, n, "A");
  require_inputs(B, n, "B");
  if (B[1] != LengthPoly{1}) throw std::invalid_argument("generic_inverse_solveC requires B_1 = 1");
  PolySeq out(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    LengthPoly acc;
    for_each_lower_chain(m, B, [&](long dk, long k, const LengthPoly& prod) {
      const LengthPoly term = A[static_cast<std::size_t>(m / dk)].substitute_power(dk) * prod;
      if (k % 2 == 0) acc += term;
      else acc -= term;
    });
    out[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return out;
}

PolySeq generic_inverse_solveA(const PolySeq& B, const PolySeq& C, long n) {
  require_size(n);
  require_inputs(B, n, "B");
  require_inputs(C, n, "C");
  PolySeq out(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    LengthPoly acc;
    for_each_upper_chain(m, B, C, [&](long, const LengthPoly& prod) { acc += prod; });
    out[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return out;
}

namespace {

PolySeq explicit_R1_table(long n) {
  PolySeq A(static_cast<std::size_t>(n) + 1), B(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    A[static_cast<std::size_t>(m)] = poly_Lcross(m);
    B[static_cast<std::size_t>(m)] = poly_C(m).shifted(-m);
  }
  PolySeq r1 = generic_inverse_solveC(A, B, n);
  for (const auto& p : r1)
    if (!p.is_polynomial()) throw InexactDivision("R1 chain sum left negative exponents: " + p.to_string());
  return r1;
}

// C'_m = R1_m(x)/x, B = S.
std::pair<PolySeq, PolySeq> explicit_R_inputs(long n) {
  const PolySeq r1 = explicit_R1_table(n);
  PolySeq B(static_cast<std::size_t>(n) + 1), C(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    B[static_cast<std::size_t>(m)] = poly_S(m);
    C[static_cast<std::size_t>(m)] = r1[static_cast<std::size_t>(m)].divide_by_x_power(1);
  }
  return {std::move(B), std::move(C)};
}

}  // namespace

LengthPoly poly_R1_explicit(long n) {
  require_size(n);
  return explicit_R1_table(n)[static_cast<std::size_t>(n)];
}

LengthPoly poly_R_explicit(long n) {
  require_size(n);
  const auto [B, C] = explicit_R_inputs(n);
  return generic_inverse_solveA(B, C, n)[static_cast<std::size_t>(n)];
}

void BiPoly::add(long x_exp, long z_exp, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{x_exp, z_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BiPoly::add_scaled(const LengthPoly& p, long z_exp) {
  if (p.is_zero()) return;
  for (long e = p.min_exponent(); e <= p.max_exponent(); ++e) add(e, z_exp, p.coeff(e));
}

mpz_class BiPoly::coeff(long x_exp, long z_exp) const {
  const auto it = terms_.find(Key{x_exp, z_exp});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

long BiPoly::max_z() const {
  long k = 0;
  for (const auto& [key, c] : terms_) k = std::max(k, key.second);
  return k;
}

LengthPoly BiPoly::at_z(const mpz_class& z) const {
  LengthPoly out;
  for (const auto& [key, c] : terms_) {
    mpz_class zk;
    mpz_pow_ui(zk.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(key.second));
    out += LengthPoly::monomial(c * zk, key.first);
  }
  return out;
}

BiPoly poly_R_refined(long n) {
  require_size(n);
  const auto [B, C] = explicit_R_inputs(n);
  BiPoly out;
  for_each_upper_chain(n, B, C, [&](long k, const LengthPoly& prod) { out.add_scaled(prod, k); });
  return out;
}

BiPoly poly_R_refined_recursive(long n) {
  require_size(n);
  const PolySeq r1 = table_R1_recursive(n);
  std::vector<BiPoly> r(static_cast<std::size_t>(n) + 1);
  for (long m = 1; m <= n; ++m) {
    BiPoly acc;
    acc.add_scaled(poly_S(m), 0);
    for (long d : divisors(m)) {
      if (d == m) continue;
      const LengthPoly factor = r1[static_cast<std::size_t>(m / d)].substitute_power(d);
      for (const auto& [key, c] : r[static_cast<std::size_t>(d)].terms()) {
        const LengthPoly term = (LengthPoly::monomial(c, key.first) * factor).divide_by_x_power(d);
        acc.add_scaled(term, key.second + 1);
      }
    }
    r[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return r[static_cast<std::size_t>(n)];
}

}  // namespace ribbon
