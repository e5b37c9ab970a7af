#include <random>

#include "doctest.h"
#include "mdft/fixtures.hpp"
#include "mdft/linalg.hpp"
#include "oracles.hpp"

using namespace mdft;

namespace {

Matrix<Gf> mat(const GaloisField& f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Gf>> v;
  for (const auto& r : rows) {
    v.emplace_back();
    for (auto x : r) v.back().push_back(f.element(x));
  }
  return Matrix<Gf>::from_rows(f.zero(), v);
}

Matrix<Rational> qmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> v;
  for (const auto& r : rows) {
    v.emplace_back();
    for (auto x : r) v.back().push_back(Rational(x));
  }
  return Matrix<Rational>::from_rows(Rational(0), v);
}

Matrix<Gf> random_matrix(const GaloisField& f, std::size_t n, std::mt19937_64& rng) {
  Matrix<Gf> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.decode(rng() % f.order());
  return m;
}

// Order by repeated multiplication.
std::uint64_t brute_order(const Matrix<Gf>& m) {
  Matrix<Gf> x = m;
  for (std::uint64_t k = 1;; ++k) {
    if (x.is_identity()) return k;
    x = x * m;
  }
}

}  // namespace

TEST_CASE("rref examples and idempotence") {
  const auto f2 = GaloisField::prime(2);
  const auto r = rref(mat(f2, {{1, 1}, {1, 1}}));
  CHECK(r.reduced == mat(f2, {{1, 1}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  const auto id = Matrix<Gf>::identity(3, f2.zero());
  CHECK(rref(id).reduced == id);
  CHECK(rref(id).rank == 3);
  const Matrix<Gf> zero(2, 3, f2.zero());
  CHECK(rref(zero).reduced == zero);
  CHECK(rref(zero).rank == 0);
  std::mt19937_64 rng(2);
  for (const auto& f : {GaloisField::prime(3), GaloisField::prime(5), GaloisField::of_degree(2, 2)}) {
    for (int t = 0; t < 50; ++t) {
      Matrix<Gf> m(2 + rng() % 4, 2 + rng() % 4, f.zero());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.decode(rng() % (t % 2 ? 2 : f.order()));
      const auto once = rref(m);
      CHECK(rref(once.reduced).reduced == once.reduced);
      for (const auto& v : kernel(m)) CHECK((m * v) == std::vector<Gf>(m.rows(), f.zero()));
      CHECK(kernel(m).size() + once.rank == m.cols());
    }
  }
}

TEST_CASE("inverse") {
  const auto f3 = GaloisField::prime(3);
  CHECK(inverse(mat(f3, {{1, 1}, {0, 1}})) == mat(f3, {{1, 2}, {0, 1}}));
  CHECK(inverse(Matrix<Gf>::identity(4, f3.zero())) == Matrix<Gf>::identity(4, f3.zero()));
  try {
    (void)inverse(mat(f3, {{1, 1}, {1, 1}}));
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.rank() == 1);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(GaloisField::prime(7), 1 + rng() % 5, rng);
    if (rank(m) < m.rows()) continue;
    CHECK(m * inverse(m) == Matrix<Gf>::identity(m.rows(), m.zero_scalar()));
  }
  const auto q = qmat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(q * inverse(q) == Matrix<Rational>::identity(3, Rational(0)));
}

TEST_CASE("characteristic polynomial") {
  const auto f2 = GaloisField::prime(2);
  const Rational z(0);
  CHECK(char_poly(Matrix<Rational>::identity(2, z)) == Poly<Rational>(z, {Rational(1), Rational(-2), Rational(1)}));
  CHECK(char_poly(mat(f2, {{0, 1}, {1, 1}})) == Poly<Gf>(f2.zero(), {f2.one(), f2.one(), f2.one()}));
  CHECK(char_poly(qmat({{0, 1}, {1, 0}})) == Poly<Rational>(z, {Rational(-1), Rational(0), Rational(1)}));
  CHECK_THROWS_AS(char_poly(Matrix<Rational>(2, 3, z)), std::invalid_argument);
  // Cayley-Hamilton on random matrices.
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(GaloisField::of_degree(3, 2), 1 + rng() % 6, rng);
    CHECK(evaluate(char_poly(m), m).is_zero());
    Matrix<Rational> r(1 + rng() % 6, 0, z);
    r = Matrix<Rational>(r.rows(), r.rows(), z);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = Rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
    const auto cp = char_poly(r);
    CHECK(cp.degree() == static_cast<int>(r.rows()));
    CHECK(evaluate(cp, r).is_zero());
  }
}

TEST_CASE("matrix order") {
  const auto f2 = GaloisField::prime(2);
  CHECK(matrix_order_ff(Matrix<Gf>::identity(3, f2.zero())) == 1u);
  CHECK(matrix_order_ff(mat(f2, {{0, 1}, {1, 1}})) == 3u);
  CHECK_FALSE(matrix_order_ff(mat(f2, {{1, 1}, {1, 1}})).has_value());
  std::mt19937_64 rng(10);
  int checked = 0;
  for (const auto& f : {GaloisField::prime(2), GaloisField::prime(3)}) {
    while (checked < (f.order() == 2 ? 100 : 200)) {
      const auto m = random_matrix(f, 1 + rng() % 4, rng);
      const auto order = matrix_order_ff(m);
      if (!order) {
        CHECK(rank(m) < m.rows());
        continue;
      }
      CHECK(*order == brute_order(m));
      ++checked;
    }
  }
}

TEST_CASE("stored reference matrices") {
  const auto m23 = reference_modular_dft(2, 3);
  CHECK(m23.rows() == 6);
  CHECK(matrix_order_ff(m23) == 4u);
  CHECK(brute_order(m23) == 4u);
  const auto m34 = reference_modular_dft(3, 4);
  CHECK(m34.rows() == 24);
  CHECK(matrix_order_ff(m34) == 488488u);
  CHECK(mat_pow(m34, 488488).is_identity());
}

TEST_CASE("complex eigenvalues of unitary matrices") {
  const auto id = Eigen::MatrixXcd::Identity(3, 3);
  for (const auto& z : eig_unit_complex(id)) CHECK(std::abs(z - 1.0) < 1e-12);
  Eigen::MatrixXcd rot(2, 2);
  rot << 0, -1, 1, 0;
  const auto ev = eig_unit_complex(rot);
  REQUIRE(ev.size() == 2);
  CHECK(std::abs(ev[0] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(std::abs(ev[1] - std::complex<double>(0, 1)) < 1e-12);
  Eigen::MatrixXcd bad(2, 2);
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(eig_unit_complex(bad), std::invalid_argument);
}
