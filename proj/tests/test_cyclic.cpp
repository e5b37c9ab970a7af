#include <random>

#include "doctest.h"
#include "mdft/cyclic.hpp"
#include "mdft/number_theory.hpp"
#include "oracles.hpp"

using namespace mdft;

namespace {

std::vector<Gf> vec(const GaloisField& f, const std::vector<std::int64_t>& v) {
  std::vector<Gf> out;
  for (auto x : v) out.push_back(f.element(x));
  return out;
}

std::vector<Gf> random_vec(const GaloisField& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Gf> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.decode(rng() % f.order()));
  return out;
}

std::vector<oracle::u64> codes(const std::vector<Gf>& v) {
  std::vector<oracle::u64> out;
  for (const auto& x : v) out.push_back(x.encode());
  return out;
}

}  // namespace

TEST_CASE("root-of-unity DFT golden vector") {
  const auto f17 = GaloisField::prime(17);
  std::vector<std::int64_t> ramp(16);
  for (int i = 0; i < 16; ++i) ramp[static_cast<std::size_t>(i)] = i;
  const auto v = vec(f17, ramp);
  const auto f = dft_root_of_unity(v, f17.element(3));
  CHECK(codes(f) == std::vector<oracle::u64>{1, 8, 2, 15, 7, 4, 6, 5, 9, 13, 12, 14, 11, 3, 16, 10});
  CHECK(idft_root_of_unity(f, f17.element(3)) == v);
}

TEST_CASE("root-of-unity DFT properties") {
  const auto f7 = GaloisField::prime(7);
  const Gf alpha = nth_root_of_unity(f7, 6);
  CHECK(dft_root_of_unity(vec(f7, {4, 0, 0, 0, 0, 0}), alpha) == vec(f7, {4, 4, 4, 4, 4, 4}));
  CHECK(dft_root_of_unity(vec(f7, {1, 1, 1, 1, 1, 1}), alpha) == vec(f7, {6, 0, 0, 0, 0, 0}));
  CHECK(idft_root_of_unity(vec(f7, {6, 0, 0, 0, 0, 0}), alpha) == vec(f7, {1, 1, 1, 1, 1, 1}));
  CHECK(idft_root_of_unity(vec(f7, {5}), f7.one()) == vec(f7, {5}));
  CHECK_THROWS_AS(dft_root_of_unity(vec(f7, {1, 2, 3}), alpha), std::invalid_argument);
  // N = 2 over F_2 has no primitive root; the inverse names p | N first.
  const auto f2 = GaloisField::prime(2);
  CHECK_THROWS_WITH_AS(idft_root_of_unity(vec(f2, {1, 0}), f2.one()), doctest::Contains("p not dividing N"),
                       std::invalid_argument);

  std::mt19937_64 rng(12);
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{17, 16}, {7, 6}, {13, 4}, {31, 5}}) {
    const auto field = GaloisField::prime(p);
    const Gf a = nth_root_of_unity(field, n);
    for (int t = 0; t < 50; ++t) {
      const auto u = random_vec(field, n, rng), v = random_vec(field, n, rng);
      const auto fu = dft_root_of_unity(u, a), fv = dft_root_of_unity(v, a);
      CHECK(codes(fu) == oracle::dft_mod_p(codes(u), a.encode(), p));
      const auto fuv = dft_root_of_unity(cyclic_convolution(u, v), a);
      for (std::size_t k = 0; k < n; ++k) CHECK(fuv[k] == fu[k] * fv[k]);
      CHECK(idft_root_of_unity(fu, a) == u);
    }
  }
}

TEST_CASE("CRT residues against long division") {
  const auto f7 = GaloisField::prime(7);
  const auto x = vec(f7, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto spectrum = crt_dft(x, 7);
  REQUIRE(spectrum.size() == 4);
  // Canonical order puts x + 1 before x + 6 = x - 1.
  CHECK(spectrum[0] == vec(f7, {6}));
  CHECK(spectrum[1] == vec(f7, {1}));
  CHECK(spectrum[2] == vec(f7, {0, 1, 0, 0}));
  CHECK(spectrum[3] == vec(f7, {0, 1, 0, 0}));
  for (const auto& r : crt_dft(vec(f7, std::vector<std::int64_t>(10, 0)), 7))
    for (const auto& c : r) CHECK(c.is_zero());

  // N = 6, p = 2, h = x^3 + 1.
  const auto f2 = GaloisField::prime(2);
  const CrtTransform t(6, 2);
  REQUIRE(t.moduli().size() == 2);
  const auto h = vec(f2, {1, 0, 0, 1, 0, 0});
  const auto r = t.forward(h);
  for (std::size_t i = 0; i < 2; ++i) {
    oracle::IntPoly m;
    for (const auto& c : t.moduli()[i].coefficients()) m.push_back(c.encode());
    auto expect = oracle::rem_monic({1, 0, 0, 1}, m, 2);
    expect.resize(m.size() - 1, 0);
    CHECK(codes(r[i]) == expect);
  }
  CHECK(t.moduli()[0] == Poly<Gf>(f2.zero(), vec(f2, {1, 0, 1})));
  CHECK(t.moduli()[1] == Poly<Gf>(f2.zero(), vec(f2, {1, 0, 1, 0, 1})));
}

TEST_CASE("CRT round trips and homomorphism") {
  std::mt19937_64 rng(21);
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {10, 7}, {6, 2}, {8, 2}, {9, 3}, {12, 2}, {10, 5}, {1, 3}, {15, 2}}) {
    const CrtTransform t(n, p);
    const auto field = GaloisField::prime(p);
    std::size_t total = 0;
    for (const auto& m : t.moduli()) total += static_cast<std::size_t>(m.degree());
    CHECK(total == n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto h = random_vec(field, n, rng);
      CHECK(t.inverse(t.forward(h)) == h);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_vec(field, n, rng), v = random_vec(field, n, rng);
      const auto su = t.forward(u), sv = t.forward(v), suv = t.forward(cyclic_convolution(u, v));
      for (std::size_t i = 0; i < t.moduli().size(); ++i) {
        const auto prod = Poly<Gf>(field.zero(), su[i]) * Poly<Gf>(field.zero(), sv[i]) % t.moduli()[i];
        CHECK(prod == Poly<Gf>(field.zero(), suv[i]));
      }
    }
    std::vector<Gf> delta(n, field.zero());
    delta[0] = field.one();
    for (const auto& r : t.forward(delta)) {
      CHECK(r[0].is_one());
      for (std::size_t j = 1; j < r.size(); ++j) CHECK(r[j].is_zero());
    }
    CHECK(t.inverse(t.forward(delta)) == delta);
  }
  const CrtTransform t(6, 2);
  CHECK_THROWS_AS(t.forward(std::vector<Gf>(5, GaloisField::prime(2).zero())), std::invalid_argument);
  CHECK_THROWS_AS(t.inverse({{GaloisField::prime(2).zero()}}), std::invalid_argument);
}

TEST_CASE("CRT over the splitting field refines to the root-of-unity DFT") {
  std::mt19937_64 rng(5);
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{10, 7}, {5, 2}, {8, 3}, {6, 7}}) {
    const CrtTransform t(n, p, true);
    const auto& field = t.field();
    CHECK(field.degree() == multiplicative_order_mod(p, n));
    REQUIRE(t.moduli().size() == n);
    const Gf alpha = nth_root_of_unity(field, n);
    const auto h = random_vec(GaloisField::prime(p), n, rng);
    std::vector<Gf> lifted;
    for (const auto& x : h) lifted.push_back(lift(x, field));
    const auto f = dft_root_of_unity(lifted, alpha);
    const auto s = t.forward(h);
    for (std::size_t i = 0; i < n; ++i) {
      // Modulus x - β: the residue is h(β), and β = α^k for a unique k.
      const Gf beta = -t.moduli()[i].coeff(0);
      std::uint64_t k = 0;
      while (alpha.pow(k) != beta) ++k;
      CHECK(s[i][0] == f[k]);
    }
    CHECK(t.inverse(s) == lifted);
  }
  // p | N: splitting field of the p-free part, factors (x - β)^{p^s}.
  const CrtTransform t(12, 2, true);
  CHECK(t.field().order() == 4);
  CHECK(t.moduli().size() == 3);
  for (auto m : t.multiplicities()) CHECK(m == 4);
}

TEST_CASE("finite-field unitary cyclic DFT") {
  const auto r32 = unitary_cyclic_dft_ff(3, 2);
  CHECK(r32.field.order() == 4);
  CHECK(r32.unitary);
  CHECK(r32.order_four);
  CHECK(r32.kronecker_structure);
  CHECK(r32.conjugation_is_involution);
  CHECK(r32.eigenvalues_fourth_roots);
  // Independent Gram computation over F_4 with plain integer polynomials.
  {
    const auto& f = r32.field;
    const oracle::IntPoly mod(f.modulus().begin(), f.modulus().end());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) {
        oracle::IntPoly acc{0, 0};
        for (std::size_t j = 0; j < 3; ++j) {
          const auto a = r32.u(i, j).coefficients(), b = r32.u(k, j).coefficients();
          const auto bq = oracle::ext_pow({b.begin(), b.end()}, 2, mod, 2);
          acc = oracle::ext_add(acc, oracle::ext_mul({a.begin(), a.end()}, bq, mod, 2), 2);
        }
        CHECK(acc == oracle::IntPoly{i == k ? 1u : 0u, 0});
      }
    }
  }
  const auto r43 = unitary_cyclic_dft_ff(4, 3);
  CHECK(r43.field.order() == 9);
  CHECK(r43.unitary);
  const auto r53 = unitary_cyclic_dft_ff(5, 3);
  CHECK(r53.m == 2);
  CHECK(r53.field.order() == 81);
  CHECK_FALSE(r53.unitary);
  CHECK(r53.kronecker_structure);
  CHECK_FALSE(r53.conjugation_is_involution);
  CHECK(r53.order_four);
  CHECK(r53.eigenvalues_fourth_roots);
  CHECK_THROWS_AS(unitary_cyclic_dft_ff(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(unitary_cyclic_dft_ff(3, 6), std::invalid_argument);

  // Unitary exactly when q ≡ -1 mod N and √N is fixed by conjugation.
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      if (n % as_prime_power(q)->first == 0) continue;
      const auto r = unitary_cyclic_dft_ff(n, q);
      CHECK(r.kronecker_structure);
      CHECK(r.order_four);
      CHECK(r.eigenvalues_fourth_roots);
      CHECK(r.unitary == (r.q_is_minus_one_mod_n && r.normalization.is_one()));
    }
  }
}

TEST_CASE("forced quadratic extension") {
  const auto r = unitary_cyclic_dft_ff(3, 2, true);
  CHECK(r.sqrt_via_extension);
  CHECK(r.field.order() == 16);
  CHECK(r.sqrt_n * r.sqrt_n == r.field.element(3));
  CHECK(r.order_four);
  CHECK(r.kronecker_structure);
  CHECK_FALSE(r.conjugation_is_involution);
}
