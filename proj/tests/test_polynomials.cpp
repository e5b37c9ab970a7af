#include <random>

#include "doctest.h"
#include "mdft/number_theory.hpp"
#include "mdft/polynomials.hpp"
#include "oracles.hpp"

using namespace mdft;

namespace {

Poly<Gf> poly(const GaloisField& f, std::vector<std::int64_t> c) {
  std::vector<Gf> v;
  for (auto x : c) v.push_back(f.element(x));
  return Poly<Gf>(f.zero(), std::move(v));
}

oracle::IntPoly ints(const Poly<Gf>& f) {
  oracle::IntPoly out;
  for (const auto& c : f.coefficients()) out.push_back(c.encode());
  return out;
}

Poly<Gf> random_poly(const GaloisField& f, int degree, std::mt19937_64& rng) {
  std::vector<Gf> v;
  for (int i = 0; i <= degree; ++i) v.push_back(f.decode(rng() % f.order()));
  return Poly<Gf>(f.zero(), std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto f2 = GaloisField::prime(2), f3 = GaloisField::prime(3), f7 = GaloisField::prime(7);
  CHECK(poly(f2, {1, 1}) * poly(f2, {1, 1}) == poly(f2, {1, 0, 1}));
  auto [q1, r1] = divmod(poly(f7, {-1, 0, 1}), poly(f7, {-1, 1}));
  CHECK(q1 == poly(f7, {1, 1}));
  CHECK(r1.is_zero());
  auto [q2, r2] = divmod(poly(f3, {0, 2, 0, 1}), poly(f3, {1, 0, 1}));
  CHECK(q2 == poly(f3, {0, 1}));
  CHECK(r2 == poly(f3, {0, 1}));
  CHECK_THROWS_AS(divmod(poly(f3, {1}), Poly<Gf>(f3.zero())), std::domain_error);
  CHECK(Poly<Gf>(f3.zero()).degree() == -1);
  CHECK(poly(f3, {1, 2, 0, 0}).degree() == 1);
  CHECK(negate_variable(poly(f7, {1, 1, 1})) == poly(f7, {1, -1, 1}));
  CHECK(is_palindromic(poly(f7, {1, 3, 1})));
  CHECK(to_string(poly(f7, {6, 0, 1})) == "x^2+6");
}

TEST_CASE("extended gcd") {
  const auto f7 = GaloisField::prime(7), f5 = GaloisField::prime(5);
  auto r = xgcd(poly(f7, {-1, 1}), poly(f7, {1, 1}));
  CHECK(r.gcd.is_one());
  CHECK(r.u * poly(f7, {-1, 1}) + r.v * poly(f7, {1, 1}) == r.gcd);
  CHECK(xgcd(poly(f5, {-1, 0, 1}), poly(f5, {-1, 1})).gcd == poly(f5, {-1, 1}));
  const auto g = poly(f5, {2, 3, 4});
  CHECK(xgcd(g, g).gcd == g.monic());
  CHECK_THROWS_AS(xgcd(Poly<Gf>(f5.zero()), Poly<Gf>(f5.zero())), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (const auto& field : {GaloisField::prime(2), GaloisField::prime(13), GaloisField::of_degree(2, 3), GaloisField::of_degree(5, 2)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_poly(field, static_cast<int>(rng() % 8), rng);
      const auto b = random_poly(field, static_cast<int>(rng() % 8), rng);
      if (a.is_zero() && b.is_zero()) continue;
      const auto x = xgcd(a, b);
      CHECK(x.u * a + x.v * b == x.gcd);
      CHECK(x.gcd.leading().is_one());
      if (!a.is_zero()) CHECK((a % x.gcd).is_zero());
      if (!b.is_zero()) CHECK((b % x.gcd).is_zero());
    }
  }
  const Rational z(0);
  const Poly<Rational> a(z, {Rational(1), Rational(2), Rational(1)}), b(z, {Rational(-1), Rational(0), Rational(1)});
  const auto x = xgcd(a, b);
  CHECK(x.gcd == Poly<Rational>(z, {Rational(1), Rational(1)}));
  CHECK(x.u * a + x.v * b == x.gcd);
}

TEST_CASE("factorization examples") {
  const auto f7 = GaloisField::prime(7), f2 = GaloisField::prime(2);
  const auto six = factor(Poly<Gf>::x_pow_minus_one(f7.zero(), 6));
  REQUIRE(six.factors.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(six.factors[static_cast<std::size_t>(i)].factor == poly(f7, {i + 1, 1}));
    CHECK(six.factors[static_cast<std::size_t>(i)].multiplicity == 1);
  }
  const auto ten = factor(Poly<Gf>::x_pow_minus_one(f7.zero(), 10));
  REQUIRE(ten.factors.size() == 4);
  CHECK(ten.factors[0].factor == poly(f7, {1, 1}));
  CHECK(ten.factors[1].factor == poly(f7, {6, 1}));
  CHECK(ten.factors[2].factor == poly(f7, {1, 1, 1, 1, 1}));
  CHECK(ten.factors[3].factor == poly(f7, {1, -1, 1, -1, 1}));
  const auto two = factor(Poly<Gf>::x_pow_minus_one(f2.zero(), 6));
  REQUIRE(two.factors.size() == 2);
  CHECK(two.factors[0].factor == poly(f2, {1, 1}));
  CHECK(two.factors[0].multiplicity == 2);
  CHECK(two.factors[1].factor == poly(f2, {1, 1, 1}));
  CHECK(two.factors[1].multiplicity == 2);
  CHECK_THROWS_AS(factor(poly(f2, {1})), std::invalid_argument);
}

TEST_CASE("factorization properties on random inputs") {
  std::mt19937_64 rng(11);
  for (const auto& field : {GaloisField::prime(2), GaloisField::prime(3), GaloisField::prime(5), GaloisField::of_degree(2, 2),
                            GaloisField::of_degree(3, 2), GaloisField::of_degree(2, 3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_poly(field, 1 + static_cast<int>(rng() % 12), rng);
      if (f.degree() < 1) continue;
      // Force repeated and inseparable factors now and then.
      if (trial % 3 == 0) f = f * f;
      if (trial % 5 == 0) f = pow(f, field.characteristic());
      const auto fac = factor(f, trial);
      CHECK(fac.expand() == f);
      CHECK(fac.total_degree() == static_cast<std::size_t>(f.degree()));
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& g = fac.factors[i].factor;
        CHECK(g.leading().is_one());
        const auto again = factor(g, 99);
        CHECK(again.factors.size() == 1);
        CHECK(again.factors[0].multiplicity == 1);
        CHECK(is_irreducible(g));
        if (field.is_prime_field() && g.degree() <= 6) CHECK(oracle::irreducible(ints(g), field.characteristic()));
        if (i > 0) CHECK(canonical_less(fac.factors[i - 1].factor, g));
      }
    }
  }
}

TEST_CASE("irreducibility test agrees with trial division") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto field = GaloisField::prime(p);
    for (std::size_t d = 1; d <= (p == 2 ? 6u : 4u); ++d) {
      for (const auto& m : oracle::monics(d, p)) {
        std::vector<std::int64_t> c(m.begin(), m.end());
        CHECK(is_irreducible(poly(field, c)) == oracle::irreducible(m, p));
      }
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  const auto f7 = GaloisField::prime(7);
  CHECK(cyclotomic_mod_p(1, 7) == poly(f7, {-1, 1}));
  CHECK(cyclotomic_mod_p(5, 7) == poly(f7, {1, 1, 1, 1, 1}));
  CHECK(cyclotomic_mod_p(10, 7) == poly(f7, {1, 6, 1, 6, 1}));
  for (std::uint64_t d = 1; d <= 60; ++d) {
    const auto phi = cyclotomic(d);
    CHECK(static_cast<std::uint64_t>(phi.degree()) == euler_phi(d));
    for (const auto& c : phi.coefficients()) CHECK(c.get_den() == 1);
  }
  // Φ_105 is the first with a coefficient of absolute value 2.
  bool has_two = false;
  const auto phi105 = cyclotomic(105);
  for (const auto& c : phi105.coefficients()) has_two |= (c == -2);
  CHECK(has_two);
}

TEST_CASE("structure of x^N - 1") {
  const auto ten = factor_xn_minus_1(10, 7);
  REQUIRE(ten.blocks.size() == 4);
  CHECK(ten.blocks[2].d == 5);
  CHECK(ten.blocks[2].residue_degree == 4);
  CHECK(ten.blocks[2].factor_count == 1);
  CHECK(ten.blocks[3].d == 10);
  CHECK(ten.blocks[3].residue_degree == 4);
  CHECK(ten.blocks[3].factor_count == 1);
  const auto six = factor_xn_minus_1(6, 2);
  CHECK(six.s == 1);
  CHECK(six.ell == 3);
  CHECK(six.multiplicity == 2);
  REQUIRE(six.factorization.factors.size() == 2);

  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const auto field = GaloisField::prime(p);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      const auto r = factor_xn_minus_1(n, p);
      CHECK(r.factorization.expand() == Poly<Gf>::x_pow_minus_one(field.zero(), n));
      CHECK(r.factorization.expand() == pow(Poly<Gf>::x_pow_minus_one(field.zero(), r.ell), r.multiplicity));
      std::size_t linear = 0;
      for (const auto& e : r.factorization.factors) linear += e.factor.degree() == 1;
      CHECK(linear == gcd_u64(n, p - 1));
      for (const auto& b : r.blocks) {
        std::uint64_t ord = 1;
        if (b.d > 1) ord = oracle::order_mod(p, b.d);
        CHECK(b.residue_degree == ord);
        CHECK(b.factors.size() == euler_phi(b.d) / ord);
        CHECK(b.factor_count == b.factors.size());
        for (const auto& g : b.factors) CHECK(static_cast<std::uint64_t>(g.degree()) == ord);
      }
    }
  }
}
