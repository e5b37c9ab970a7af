#pragma once

#include <array>
#include <string>

#include "mdft/scalar.hpp"

namespace mdft {

/// a + b√2 + c√3 + d√6 in K = Q(√2, √3), with exact rational components.
class QuadTower {
 public:
  QuadTower() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
  explicit QuadTower(Rational a, Rational b = 0, Rational c = 0, Rational d = 0);

  static QuadTower sqrt2() { return QuadTower(0, 1); }
  static QuadTower sqrt3() { return QuadTower(0, 0, 1); }
  static QuadTower sqrt6() { return QuadTower(0, 0, 0, 1); }

  /// Components (a, b, c, d).
  const std::array<Rational, 4>& components() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  bool is_rational() const;

  friend QuadTower operator+(const QuadTower& x, const QuadTower& y);
  friend QuadTower operator-(const QuadTower& x, const QuadTower& y);
  friend QuadTower operator-(const QuadTower& x);
  friend QuadTower operator*(const QuadTower& x, const QuadTower& y);
  /// Solves y·z = x as a 4×4 rational system. Throws std::domain_error when y = 0.
  friend QuadTower operator/(const QuadTower& x, const QuadTower& y);
  friend bool operator==(const QuadTower& x, const QuadTower& y) = default;

 private:
  std::array<Rational, 4> c_;
};

inline bool is_zero(const QuadTower& x) { return x == QuadTower(); }
inline QuadTower from_int(const QuadTower&, std::int64_t v) { return QuadTower(Rational(static_cast<long>(v))); }
std::string to_string(const QuadTower& x);

/// The automorphism √2 ↦ s2·√2, √3 ↦ s3·√3 with s2, s3 ∈ {+1, -1}.
QuadTower galois_conjugate(const QuadTower& x, int s2, int s3);

/// The four automorphisms in the order (+,+), (-,+), (+,-), (-,-).
inline constexpr std::array<std::array<int, 2>, 4> kGaloisSigns{{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}}};

/// Image under the real embedding with positive square roots.
double to_double(const QuadTower& x);

static_assert(FieldScalar<QuadTower>);

}  // namespace mdft
