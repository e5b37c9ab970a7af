#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mdft/group_algebra.hpp"
#include "oracles.hpp"

using namespace mdft;

namespace {

std::size_t distinct_cores(unsigned n, unsigned p) {
  std::set<std::vector<int>> cores;
  for (const auto& lambda : partitions(n)) {
    std::set<std::pair<std::vector<int>, int>> found;
    oracle::all_cores({lambda.begin(), lambda.end()}, static_cast<int>(p), found);
    for (const auto& [core, w] : found) cores.insert(core);
  }
  return cores.size();
}

// Number of standard tableaux by recursion on removable corners.
std::uint64_t count_tableaux(std::vector<unsigned> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i]) continue;
    auto mu = lambda;
    --mu[i];
    total += count_tableaux(mu);
  }
  return total;
}

// Block idempotents from ordinary characters: e_B = Σ_{λ ∈ B} d_λ/n! Σ_g χ_λ(g^{-1}) g, reduced mod p.
std::set<std::vector<std::uint32_t>> character_idempotents(unsigned n, unsigned p) {
  const auto& g = SymmetricGroup::get(n);
  std::map<std::vector<int>, std::vector<Rational>> blocks;
  for (const auto& lambda : partitions(n)) {
    std::set<std::pair<std::vector<int>, int>> found;
    oracle::all_cores({lambda.begin(), lambda.end()}, static_cast<int>(p), found);
    auto& acc = blocks[found.begin()->first];
    acc.resize(g.order(), Rational(0));
    const Rational d(static_cast<long>(count_tableaux(lambda)));
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto& m = specht_matrix(lambda, g.element(g.inverse(x)));
      Rational chi(0);
      for (std::size_t i = 0; i < m.rows(); ++i) chi += m(i, i);
      acc[x] += d * chi / Rational(static_cast<long>(g.order()));
    }
  }
  std::set<std::vector<std::uint32_t>> out;
  const Gf zero = GaloisField::prime(p).zero();
  for (const auto& [core, coeffs] : blocks) {
    std::vector<std::uint32_t> v;
    for (const auto& c : coeffs) v.push_back(static_cast<std::uint32_t>(from_rational(zero, c).encode()));
    out.insert(v);
  }
  return out;
}

GroupAlgebraElement random_element(unsigned n, std::uint64_t p, std::mt19937_64& rng) {
  GroupAlgebraElement v(n, p);
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % p));
  return v;
}

}  // namespace

TEST_CASE("group algebra arithmetic") {
  const auto s = GroupAlgebraElement::basis(3, 5, Permutation::parse("213"));
  const auto t = GroupAlgebraElement::basis(3, 5, Permutation::parse("132"));
  CHECK(s * t == GroupAlgebraElement::basis(3, 5, Permutation::parse("213") * Permutation::parse("132")));
  CHECK(s * s == GroupAlgebraElement::identity(3, 5));
  CHECK((s + s).coefficient(Permutation::parse("213")) == 2);
  CHECK((s - s).is_zero());
  CHECK(s.to_map() == std::map<std::string, std::uint64_t>{{"213", 1}});
  CHECK_THROWS_AS(GroupAlgebraElement(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(GroupAlgebraElement(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(s * GroupAlgebraElement(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(s * GroupAlgebraElement(4, 5), std::invalid_argument);
}

TEST_CASE("class sums are central and sum to the all-ones element") {
  for (unsigned n : {3u, 4u}) {
    const auto sums = class_sums(n, 7);
    CHECK(sums.size() == partitions(n).size());
    GroupAlgebraElement total(n, 7);
    for (const auto& c : sums) {
      total += c;
      for (const auto& sigma : enumerate_group(n)) {
        const auto d = GroupAlgebraElement::basis(n, 7, sigma);
        CHECK(c * d == d * c);
      }
    }
    for (auto x : total.coefficients()) CHECK(x == 1);
  }
}

TEST_CASE("central idempotent axioms") {
  const std::pair<std::uint64_t, unsigned> cases[] = {{2, 3}, {3, 4}, {2, 4}, {3, 3}, {7, 4}, {5, 4}, {2, 5}, {5, 5}};
  for (const auto& [p, n] : cases) {
    CAPTURE(p);
    CAPTURE(n);
    const auto set = central_idempotents(n, p, 11);
    const auto ax = check_idempotent_axioms(set);
    CHECK(ax.central);
    CHECK(ax.idempotent);
    CHECK(ax.orthogonal);
    CHECK(ax.complete);
    CHECK(ax.primitive);
    std::size_t dims = 0;
    for (auto d : set.block_dimensions) dims += d;
    CHECK(dims == SymmetricGroup::get(n).order());
    CHECK(std::is_sorted(set.block_dimensions.begin(), set.block_dimensions.end()));
  }
}

TEST_CASE("block count equals the number of p-cores") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned n : {3u, 4u, 5u}) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(central_idempotents(n, p).idempotents.size() == distinct_cores(n, p));
    }
  }
}

TEST_CASE("idempotents agree with the character formula") {
  const std::pair<unsigned, unsigned> cases[] = {{2, 3}, {3, 3}, {2, 4}, {3, 4}, {5, 4}, {7, 4}, {3, 5}, {5, 5}};
  for (const auto& [p, n] : cases) {
    CAPTURE(p);
    CAPTURE(n);
    std::set<std::vector<std::uint32_t>> ours;
    for (const auto& e : central_idempotents(n, p, 3).idempotents) ours.insert(e.coefficients());
    CHECK(ours == character_idempotents(n, p));
  }
}

TEST_CASE("block dimensions are sums of squared degrees") {
  const auto set = central_idempotents(4, 7);
  CHECK(set.block_dimensions == std::vector<std::size_t>{1, 1, 4, 9, 9});
  for (unsigned p : {2u, 3u}) {
    std::map<std::vector<int>, std::size_t> expected;
    for (const auto& lambda : partitions(5)) {
      std::set<std::pair<std::vector<int>, int>> found;
      oracle::all_cores({lambda.begin(), lambda.end()}, static_cast<int>(p), found);
      const auto d = count_tableaux(lambda);
      expected[found.begin()->first] += d * d;
    }
    std::multiset<std::size_t> want, got;
    for (const auto& [core, dim] : expected) want.insert(dim);
    for (auto d : central_idempotents(5, p).block_dimensions) got.insert(d);
    CHECK(got == want);
  }
}

TEST_CASE("seed does not change the idempotents") {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const auto a = central_idempotents(4, 3, seed);
    const auto b = central_idempotents(4, 3, 7);
    CHECK(a.idempotents == b.idempotents);
  }
}

TEST_CASE("projection decomposes every element") {
  std::mt19937_64 rng(5);
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 4}, {5, 3}}) {
    const auto set = central_idempotents(n, p);
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = random_element(n, p, rng);
      GroupAlgebraElement sum(n, p);
      for (const auto& e : set.idempotents) {
        const auto part = block_project(v, e);
        CHECK(block_project(part, e) == part);
        sum += part;
      }
      CHECK(sum == v);
    }
  }
}

TEST_CASE("modular dft block-diagonalizes right multiplication") {
  std::mt19937_64 rng(17);
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 4}, {2, 4}, {5, 4}}) {
    CAPTURE(p);
    CAPTURE(n);
    const auto dft = modular_dft_matrix(p, n);
    const std::size_t size = SymmetricGroup::get(n).order();
    REQUIRE(dft.basis.rows() == size);
    CHECK((dft.transform * dft.basis).is_identity());
    CHECK(dft.layout.size() == dft.idempotents.idempotents.size());
    for (std::size_t b = 0; b < dft.layout.size(); ++b) CHECK(dft.layout[b].size == dft.idempotents.block_dimensions[b]);
    for (int trial = 0; trial < 3; ++trial) {
      const auto w = random_element(n, p, rng);
      const auto r = right_multiplication_matrix(w);
      CHECK(is_block_diagonal(dft.transform * r * dft.basis, dft.layout));
    }
    // Left multiplication also preserves the left ideals.
    const auto w = random_element(n, p, rng);
    Matrix<Gf> left(size, size, GaloisField::prime(p).zero());
    const auto& g = SymmetricGroup::get(n);
    for (std::size_t s = 0; s < size; ++s) {
      const auto col = w * GroupAlgebraElement::basis(n, p, g.element(s));
      for (std::size_t i = 0; i < size; ++i) left(i, s) = GaloisField::prime(p).element(col.coefficient(i));
    }
    CHECK(is_block_diagonal(dft.transform * left * dft.basis, dft.layout));
  }
}

TEST_CASE("right multiplication matrix matches convolution") {
  std::mt19937_64 rng(23);
  const auto w = random_element(3, 5, rng);
  const auto v = random_element(3, 5, rng);
  const auto m = right_multiplication_matrix(w);
  const auto got = m * v.to_field_vector();
  CHECK(got == (v * w).to_field_vector());
}

TEST_CASE("is_block_diagonal detects off-block entries") {
  const GaloisField f = GaloisField::prime(3);
  auto m = Matrix<Gf>::identity(4, f.zero());
  const std::vector<BlockRange> layout{{0, 1}, {1, 3}};
  CHECK(is_block_diagonal(m, layout));
  m(0, 2) = f.one();
  CHECK_FALSE(is_block_diagonal(m, layout));
}
