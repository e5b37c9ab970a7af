#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mdft/fields.hpp"
#include "mdft/matrix.hpp"
#include "mdft/number_theory.hpp"

namespace mdft {

/// The bound U = p^{L-1} · ∏ (q^{k_i} - 1) over the distinct irreducible
/// factors (degrees k_i) of the characteristic polynomial of the L×L matrix
/// M over F_q, as a prime factorization. Every invertible M satisfies M^U = I.
PrimePowers matrix_order_bound(const Matrix<Gf>& m, std::uint64_t seed = 0);

/// Multiplicative order of M, or nullopt when det M = 0. The least divisor of
/// the bound U with M^d = I is found by stripping primes from U one at a time;
/// the result is re-verified by exponentiation. Throws std::overflow_error if
/// the order exceeds 64 bits.
std::optional<std::uint64_t> matrix_order_ff(const Matrix<Gf>& m, std::uint64_t seed = 0);

/// Eigenvalues of an approximately unitary complex matrix, sorted by
/// (real, imag). Throws std::invalid_argument when ‖MM* - I‖∞ > tol and
/// std::runtime_error when the QR iteration fails or an eigenvalue lies
/// farther than tol from the unit circle.
std::vector<std::complex<double>> eig_unit_complex(const Eigen::MatrixXcd& m, double tol = 1e-10);

/// Induced ∞-norm (max absolute row sum) of MM* - I.
double unitarity_defect(const Eigen::MatrixXcd& m);

}  // namespace mdft
