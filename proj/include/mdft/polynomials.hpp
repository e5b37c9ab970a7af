#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdft/fields.hpp"
#include "mdft/scalar.hpp"

namespace mdft {

/// Dense univariate polynomial over an exact field, coefficients ascending.
///
/// The zero polynomial has no coefficients and degree -1. Every polynomial
/// carries a zero scalar of its coefficient field so that finite-field
/// polynomials know their field even when empty.
template <FieldScalar T>
class Poly {
 public:
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(T zero, std::vector<T> coeffs) : zero_(std::move(zero)), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& zero, const T& c) { return Poly(zero, {c}); }
  static Poly monomial(const T& zero, const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, zero);
    v[degree] = c;
    return Poly(zero, std::move(v));
  }
  static Poly x(const T& zero) { return monomial(zero, from_int(zero, 1), 1); }
  /// x^n - 1.
  static Poly x_pow_minus_one(const T& zero, std::size_t n) {
    std::vector<T> v(n + 1, zero);
    v[0] = from_int(zero, -1);
    v[n] = T(v[n] + from_int(zero, 1));
    return Poly(zero, std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == from_int(zero_, 1); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
  const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return coeffs_.back();
  }
  const T& zero_scalar() const { return zero_; }

  Poly monic() const {
    if (is_zero()) return *this;
    const T inv = T(from_int(zero_, 1) / leading());
    return *this * inv;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(T(coeffs_[i] * from_int(zero_, static_cast<std::int64_t>(i))));
    return Poly(zero_, std::move(d));
  }

  /// Horner evaluation.
  T operator()(const T& at) const {
    T acc = zero_;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = T(acc * at + coeffs_[i]);
    return acc;
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] + rhs.coeffs_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = T(coeffs_[i] - rhs.coeffs_[i]);
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(a.zero_) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::scalar_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = T(out[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return Poly(a.zero_, std::move(out));
  }
  friend Poly operator*(Poly a, const T& s) {
    for (auto& c : a.coeffs_) c = T(c * s);
    a.trim();
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  T zero_;
  std::vector<T> coeffs_;
};

template <FieldScalar T>
struct DivMod {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// Long division; throws std::domain_error for a zero divisor.
template <FieldScalar T>
DivMod<T> divmod(const Poly<T>& f, const Poly<T>& g) {
  if (g.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const T& zero = f.zero_scalar();
  std::vector<T> rem = f.coefficients();
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly<T>(zero), f};
  std::vector<T> quot(static_cast<std::size_t>(f.degree() - dg + 1), zero);
  const T lead_inv = T(from_int(zero, 1) / g.leading());
  for (int i = f.degree(); i >= dg; --i) {
    const T c = T(rem[static_cast<std::size_t>(i)] * lead_inv);
    if (is_zero(c)) continue;
    quot[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dg + j)];
      slot = T(slot - c * g.coefficients()[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(dg), zero);
  return {Poly<T>(zero, std::move(quot)), Poly<T>(zero, std::move(rem))};
}

template <FieldScalar T>
Poly<T> operator/(const Poly<T>& f, const Poly<T>& g) {
  return divmod(f, g).quotient;
}

template <FieldScalar T>
Poly<T> operator%(const Poly<T>& f, const Poly<T>& g) {
  return divmod(f, g).remainder;
}

template <FieldScalar T>
struct Xgcd {
  Poly<T> gcd;  // monic
  Poly<T> u;
  Poly<T> v;
};

/// Extended Euclid: u·f + v·g = gcd(f, g), gcd monic. Throws
/// std::invalid_argument when both inputs are zero.
template <FieldScalar T>
Xgcd<T> xgcd(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("xgcd: both polynomials are zero");
  const T& zero = f.zero_scalar();
  const Poly<T> one = Poly<T>::constant(zero, from_int(zero, 1));
  Poly<T> r0 = f, r1 = g;
  Poly<T> s0 = one, s1(zero);
  Poly<T> t0(zero), t1 = one;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<T> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const T inv = T(from_int(zero, 1) / r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <FieldScalar T>
Poly<T> gcd(const Poly<T>& f, const Poly<T>& g) {
  Poly<T> a = f, b = g;
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FieldScalar T>
Poly<T> pow(Poly<T> base, std::uint64_t e) {
  Poly<T> result = Poly<T>::constant(base.zero_scalar(), from_int(base.zero_scalar(), 1));
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// base^e mod m.
template <FieldScalar T>
Poly<T> pow_mod(Poly<T> base, std::uint64_t e, const Poly<T>& m) {
  Poly<T> result = Poly<T>::constant(base.zero_scalar(), from_int(base.zero_scalar(), 1)) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = result * base % m;
    e >>= 1;
    if (e > 0) base = base * base % m;
  }
  return result;
}

/// Coefficient vector equals its reverse.
template <FieldScalar T>
bool is_palindromic(const Poly<T>& f) {
  const auto& c = f.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// f(-x).
template <FieldScalar T>
Poly<T> negate_variable(const Poly<T>& f) {
  std::vector<T> c = f.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = T(-c[i]);
  return Poly<T>(f.zero_scalar(), std::move(c));
}

template <FieldScalar T>
std::string to_string(const Poly<T>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coefficients().size(); i-- > 0;) {
    const T& c = f.coefficients()[i];
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    const bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (negative) cs.erase(0, 1);
    if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
    const bool unit = i > 0 && cs == "1";
    if (!unit) out += cs;
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? var : var + "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-field specifics.

struct FactorEntry {
  Poly<Gf> factor;  // monic irreducible
  unsigned multiplicity;
};

/// unit · ∏ factor^multiplicity, factors pairwise distinct and canonically ordered.
struct Factorization {
  Gf unit;
  std::vector<FactorEntry> factors;

  Poly<Gf> expand() const;
  std::size_t total_degree() const;
};

/// Degree first, then ascending coefficient vectors compared lexicographically
/// by element encoding (constant term first).
bool canonical_less(const Poly<Gf>& a, const Poly<Gf>& b);

bool is_irreducible(const Poly<Gf>& f);

/// Squarefree decomposition (with p-th root extraction when f' = 0),
/// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
/// driven by a seeded generator. Throws std::invalid_argument for constants.
Factorization factor(const Poly<Gf>& f, std::uint64_t seed = 0);

/// Φ_d over the integers via Φ_d = (x^d - 1) / ∏_{e | d, e < d} Φ_e.
Poly<Rational> cyclotomic(std::uint64_t d);
Poly<Gf> cyclotomic_mod_p(std::uint64_t d, std::uint64_t p);
Poly<Gf> reduce_into(const Poly<Rational>& f, const GaloisField& field);

/// Structure of x^N - 1 over F_p, with N = p^s ℓ and p ∤ ℓ.
struct CyclotomicBlock {
  std::uint64_t d;               // divisor of ℓ
  std::uint64_t residue_degree;  // f = ord_d(p)
  std::uint64_t factor_count;    // g = φ(d)/f
  std::vector<Poly<Gf>> factors; // irreducible factors of Φ_d mod p, canonical order
};

struct XnMinusOneFactorization {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t ell = 0;
  std::uint64_t multiplicity = 1;  // p^s
  std::vector<CyclotomicBlock> blocks;  // d ascending
  Factorization factorization;  // all factors, canonical order, multiplicity p^s each
  /// Divisor d for each entry of factorization.factors.
  std::vector<std::uint64_t> divisor_of_factor;
};

XnMinusOneFactorization factor_xn_minus_1(std::uint64_t n, std::uint64_t p, std::uint64_t seed = 0);

}  // namespace mdft
