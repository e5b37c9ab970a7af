#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mdft/matrix.hpp"
#include "mdft/polynomials.hpp"
#include "mdft/quad_tower.hpp"
#include "mdft/symmetric_group.hpp"

namespace mdft {

/// Largest n for the floating-point unitary transforms.
inline constexpr unsigned kMaxUnitaryDegree = 5;

/// A Specht representation conjugated into orthogonal form: with
/// P = (1/n!) Σ ρ(g)ρ(g)ᵀ = M D Mᵀ and Q = M D^{1/2} Mᵀ, τ(g) = Q^{-1} ρ(g) Q.
struct UnitarizedRepresentation {
  Partition shape;
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  /// τ(g) for every g, indexed like SymmetricGroup::elements().
  std::vector<Eigen::MatrixXd> tau;
  /// max_g ‖τ(g)τ(g)ᵀ - I‖∞.
  double defect = 0;
};

/// Throws std::invalid_argument for |λ| > 5 and std::runtime_error when P has
/// an eigenvalue below 1e-12.
UnitarizedRepresentation weyl_unitarize(const Partition& lambda);

struct UnitaryDftReport {
  unsigned n = 0;
  /// Rows (λ, i, j) in partition order then row-major, columns group elements;
  /// entries √(d_λ/n!)·τ_λ(g)_{ij}.
  Eigen::MatrixXcd U;
  double defect = 0;
  std::vector<UnitarizedRepresentation> representations;
  /// Sorted by (real, imag).
  std::vector<std::complex<double>> eigenvalues;
};

/// Throws std::invalid_argument unless 1 <= n <= 5.
UnitaryDftReport unitary_sn_dft(unsigned n);

/// The stored 6×6 unitary DFT of S_3 over Q(√2, √3) with its polynomials.
struct N3Fixture {
  Matrix<QuadTower> U{0, 0, QuadTower()};
  Poly<QuadTower> f{QuadTower()};
  Poly<Rational> g{Rational(0)};
  std::vector<std::complex<double>> eigenvalues;
};

/// Reads data_dir()/unitary_s3_fixture.txt unless a path is given. Throws
/// std::runtime_error on malformed input.
N3Fixture load_n3_fixture(const std::filesystem::path& path = {});

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct N3FixtureReport {
  /// (a) orthogonal, (b) char_poly = f, (c) f palindromic, (d) Π σ(f) = g,
  /// (e) eigenvalues match, (f) non-integer coefficient.
  std::vector<FixtureCheck> checks;
  Poly<QuadTower> char_poly{QuadTower()};
  /// Π_σ σ(char_poly), which is rational when (d) can hold.
  Poly<QuadTower> conjugate_product{QuadTower()};
  std::vector<std::complex<double>> computed_eigenvalues;
  /// Largest distance between the stored and computed eigenvalues.
  double eigenvalue_error = 0;
  /// Same, against the negated stored eigenvalues.
  double negated_eigenvalue_error = 0;
  bool product_matches_g_of_minus_x = false;
  /// Whether σ(f) divides the stored g, per automorphism in kGaloisSigns order.
  std::vector<bool> conjugate_divides_g;
  bool all_passed() const;
};

N3FixtureReport verify_n3_fixture(const N3Fixture& fixture);

}  // namespace mdft
