#include "mdft/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mdft {

namespace {

// M^(∏ r^e) applied prime by prime so the exponent never needs to fit a word.
Matrix<Gf> pow_factored(Matrix<Gf> m, const PrimePowers& exponent) {
  for (auto [prime, exp] : exponent)
    for (unsigned i = 0; i < exp; ++i) m = mat_pow(std::move(m), prime);
  return m;
}

}  // namespace

PrimePowers matrix_order_bound(const Matrix<Gf>& m, std::uint64_t seed) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("matrix_order_bound: need a nonempty square matrix");
  const GaloisField field = m.zero_scalar().field();
  const std::uint64_t p = field.characteristic();
  const std::uint64_t q = field.order();
  PrimePowers bound;
  if (m.rows() > 1) bound.emplace_back(p, static_cast<unsigned>(m.rows() - 1));
  for (const auto& entry : factor(char_poly(m), seed).factors) {
    // q^k - 1 = ∏_{d | k} Φ_d(q); each value is factored separately.
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(entry.factor.degree()))) {
      const Poly<Rational> phi = cyclotomic(d);
      const Rational value = phi(Rational(static_cast<unsigned long>(q)));
      const mpz_class& v = value.get_num();
      if (!v.fits_ulong_p()) {
        throw std::overflow_error("matrix_order_bound: cyclotomic value Phi_" + std::to_string(d) + "(" +
                                  std::to_string(q) + ") exceeds 64 bits");
      }
      merge_prime_powers(bound, factor_integer(v.get_ui()));
    }
  }
  return bound;
}

std::optional<std::uint64_t> matrix_order_ff(const Matrix<Gf>& m, std::uint64_t seed) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("matrix_order_ff: need a nonempty square matrix");
  if (is_zero(char_poly(m).coeff(0))) return std::nullopt;
  PrimePowers order = matrix_order_bound(m, seed);
  if (!pow_factored(m, order).is_identity()) throw std::logic_error("matrix_order_ff: M^U != I; order bound is wrong");
  for (auto& [prime, exp] : order) {
    while (exp > 0) {
      --exp;
      if (!pow_factored(m, order).is_identity()) {
        ++exp;
        break;
      }
    }
  }
  std::uint64_t result = 1;
  for (auto [prime, exp] : order) {
    for (unsigned i = 0; i < exp; ++i) {
      if (result > UINT64_MAX / prime) throw std::overflow_error("matrix_order_ff: order exceeds 64 bits");
      result *= prime;
    }
  }
  if (!mat_pow(m, result).is_identity()) throw std::logic_error("matrix_order_ff: verification M^order = I failed");
  return result;
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd e = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return e.cwiseAbs().rowwise().sum().maxCoeff();
}

std::vector<std::complex<double>> eig_unit_complex(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_unit_complex: matrix is not square");
  if (m.rows() == 0) return {};
  const double defect = unitarity_defect(m);
  if (defect > tol) {
    throw std::invalid_argument("eig_unit_complex: matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_unit_complex: QR iteration did not converge");
  std::vector<std::complex<double>> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
  for (const auto& z : out) {
    if (std::abs(std::abs(z) - 1.0) > tol) {
      throw std::runtime_error("eig_unit_complex: eigenvalue off the unit circle by " + std::to_string(std::abs(std::abs(z) - 1.0)));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace mdft
