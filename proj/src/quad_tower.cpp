#include "mdft/quad_tower.hpp"

#include <cmath>
#include <stdexcept>

#include "mdft/matrix.hpp"

namespace mdft {

namespace {

// Column k of the multiplication-by-y map holds the components of y·e_k.
Matrix<Rational> multiplication_matrix(const QuadTower& y) {
  const auto& [a, b, c, d] = y.components();
  return Matrix<Rational>::from_rows(Rational(0), {
      {a, Rational(2 * b), Rational(3 * c), Rational(6 * d)},
      {b, a, Rational(3 * d), Rational(3 * c)},
      {c, Rational(2 * d), a, Rational(2 * b)},
      {d, c, b, a},
  });
}

}  // namespace

QuadTower::QuadTower(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& x : c_) x.canonicalize();
}

bool QuadTower::is_rational() const { return is_zero(c_[1]) && is_zero(c_[2]) && is_zero(c_[3]); }

QuadTower operator+(const QuadTower& x, const QuadTower& y) {
  return QuadTower(Rational(x.c_[0] + y.c_[0]), Rational(x.c_[1] + y.c_[1]), Rational(x.c_[2] + y.c_[2]),
                   Rational(x.c_[3] + y.c_[3]));
}

QuadTower operator-(const QuadTower& x, const QuadTower& y) {
  return QuadTower(Rational(x.c_[0] - y.c_[0]), Rational(x.c_[1] - y.c_[1]), Rational(x.c_[2] - y.c_[2]),
                   Rational(x.c_[3] - y.c_[3]));
}

QuadTower operator-(const QuadTower& x) { return QuadTower() - x; }

QuadTower operator*(const QuadTower& x, const QuadTower& y) {
  const auto& [a, b, c, d] = x.c_;
  const auto& [e, f, g, h] = y.c_;
  // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2.
  return QuadTower(Rational(a * e + 2 * b * f + 3 * c * g + 6 * d * h), Rational(a * f + b * e + 3 * c * h + 3 * d * g),
                   Rational(a * g + c * e + 2 * b * h + 2 * d * f), Rational(a * h + d * e + b * g + c * f));
}

QuadTower operator/(const QuadTower& x, const QuadTower& y) {
  if (is_zero(y)) throw std::domain_error("division by zero in Q(sqrt2, sqrt3)");
  const Matrix<Rational> inv = inverse(multiplication_matrix(y));
  const std::vector<Rational> z = inv * std::vector<Rational>(x.c_.begin(), x.c_.end());
  return QuadTower(z[0], z[1], z[2], z[3]);
}

std::string to_string(const QuadTower& x) {
  static const char* const names[] = {"", "sqrt(2)", "sqrt(3)", "sqrt(6)"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational& c = x[i];
    if (is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string term = i == 0 ? mdft::to_string(mag) : (mag == 1 ? names[i] : mdft::to_string(mag) + "*" + names[i]);
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

QuadTower galois_conjugate(const QuadTower& x, int s2, int s3) {
  if ((s2 != 1 && s2 != -1) || (s3 != 1 && s3 != -1)) throw std::invalid_argument("galois_conjugate: signs must be +1 or -1");
  return QuadTower(x[0], Rational(s2 * x[1]), Rational(s3 * x[2]), Rational(s2 * s3 * x[3]));
}

double to_double(const QuadTower& x) {
  return x[0].get_d() + x[1].get_d() * std::sqrt(2.0) + x[2].get_d() * std::sqrt(3.0) + x[3].get_d() * std::sqrt(6.0);
}

}  // namespace mdft
