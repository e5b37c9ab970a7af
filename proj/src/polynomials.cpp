#include "mdft/polynomials.hpp"

#include <map>
#include <mutex>
#include <random>

#include "mdft/number_theory.hpp"

namespace mdft {

namespace {

using P = Poly<Gf>;

P one_like(const P& f) { return P::constant(f.zero_scalar(), f.zero_scalar().field().one()); }

// For f with f' = 0 (so only exponents divisible by p occur), the g with g^p = f.
P pth_root(const P& f) {
  const GaloisField field = f.zero_scalar().field();
  const std::uint64_t p = field.characteristic();
  std::vector<Gf> out;
  for (std::size_t i = 0; i * p < f.coefficients().size(); ++i) {
    out.push_back(frobenius(f.coefficients()[i * p], field.degree() - 1));
  }
  return P(f.zero_scalar(), std::move(out));
}

// f monic. Appends pairwise coprime squarefree parts with their multiplicities.
void squarefree_parts(const P& f, unsigned scale, std::vector<std::pair<P, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const auto p = static_cast<unsigned>(f.zero_scalar().field().characteristic());
  const P d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), scale * p, out);
    return;
  }
  P c = gcd(f, d);
  P w = f / c;
  for (unsigned i = 1; !w.is_one(); ++i) {
    P y = gcd(w, c);
    P part = w / y;
    if (part.degree() > 0) out.emplace_back(part, i * scale);
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), scale * p, out);
}

// f monic squarefree. Returns (product of all irreducible factors of degree d, d).
std::vector<std::pair<P, unsigned>> distinct_degree_parts(P f) {
  std::vector<std::pair<P, unsigned>> out;
  const std::uint64_t q = f.zero_scalar().field().order();
  const P x = P::x(f.zero_scalar());
  P h = x;
  for (unsigned i = 1; f.degree() >= static_cast<int>(2 * i); ++i) {
    h = pow_mod(h, q, f);
    P g = gcd(f, h - x);
    if (!g.is_one()) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), i);
    }
  }
  if (f.degree() > 0) {
    const auto d = static_cast<unsigned>(f.degree());
    out.emplace_back(std::move(f), d);
  }
  return out;
}

P random_poly_below(const P& f, std::mt19937_64& rng) {
  const GaloisField field = f.zero_scalar().field();
  std::vector<Gf> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(field.decode(rng() % field.order()));
  return P(f.zero_scalar(), std::move(c));
}

// Cantor-Zassenhaus splitting polynomial for factors of degree d.
P splitting_candidate(const P& a, unsigned d, const P& f) {
  const GaloisField field = f.zero_scalar().field();
  const std::uint64_t q = field.order();
  if (field.characteristic() == 2) {
    // Absolute trace a + a^2 + a^4 + ... over all k·d Frobenius steps.
    P trace = a;
    P c = a;
    for (unsigned i = 1; i < field.degree() * d; ++i) {
      c = c * c % f;
      trace += c;
    }
    return trace;
  }
  // a^{(q^d - 1)/2} = (a · a^q · ... · a^{q^{d-1}})^{(q-1)/2}.
  P norm = a;
  P c = a;
  for (unsigned i = 1; i < d; ++i) {
    c = pow_mod(c, q, f);
    norm = norm * c % f;
  }
  return pow_mod(norm, (q - 1) / 2, f) - one_like(f);
}

void equal_degree_split(const P& f, unsigned d, std::mt19937_64& rng, std::vector<P>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  for (;;) {
    const P a = random_poly_below(f, rng);
    if (a.degree() <= 0) continue;
    const P g = gcd(f, splitting_candidate(a, d, f));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool canonical_less(const Poly<Gf>& a, const Poly<Gf>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].encode() != cb[i].encode()) return ca[i].encode() < cb[i].encode();
  }
  return false;
}

Poly<Gf> Factorization::expand() const {
  Poly<Gf> out = Poly<Gf>::constant(unit.field().zero(), unit);
  for (const auto& [f, m] : factors) out *= pow(f, m);
  return out;
}

std::size_t Factorization::total_degree() const {
  std::size_t total = 0;
  for (const auto& [f, m] : factors) total += static_cast<std::size_t>(f.degree()) * m;
  return total;
}

bool is_irreducible(const Poly<Gf>& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const P g = f.monic();
  const std::uint64_t q = f.zero_scalar().field().order();
  const P x = P::x(f.zero_scalar());
  P h = x;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = pow_mod(h, q, g);
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

Factorization factor(const Poly<Gf>& f, std::uint64_t seed) {
  if (f.degree() < 1) throw std::invalid_argument("factor: polynomial must have degree >= 1");
  std::mt19937_64 rng(seed);
  Factorization result{f.leading(), {}};
  std::vector<std::pair<P, unsigned>> parts;
  squarefree_parts(f.monic(), 1, parts);
  for (const auto& [part, multiplicity] : parts) {
    for (const auto& [bundle, d] : distinct_degree_parts(part)) {
      std::vector<P> irreducibles;
      equal_degree_split(bundle, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), multiplicity});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorEntry& a, const FactorEntry& b) { return canonical_less(a.factor, b.factor); });
  return result;
}

Poly<Rational> cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, Poly<Rational>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  const Rational zero(0);
  Poly<Rational> result = Poly<Rational>::x_pow_minus_one(zero, d);
  for (std::uint64_t e : divisors(d)) {
    if (e == d) continue;
    auto [quotient, remainder] = divmod(result, cyclotomic(e));
    if (!remainder.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    result = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, result);
  return result;
}

Poly<Gf> reduce_into(const Poly<Rational>& f, const GaloisField& field) {
  std::vector<Gf> c;
  for (const auto& r : f.coefficients()) c.push_back(from_rational(field.zero(), r));
  return Poly<Gf>(field.zero(), std::move(c));
}

Poly<Gf> cyclotomic_mod_p(std::uint64_t d, std::uint64_t p) {
  return reduce_into(cyclotomic(d), GaloisField::prime(p));
}

XnMinusOneFactorization factor_xn_minus_1(std::uint64_t n, std::uint64_t p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("factor_xn_minus_1: N must be positive");
  const GaloisField field = GaloisField::prime(p);
  XnMinusOneFactorization out;
  out.n = n;
  out.p = p;
  out.ell = n;
  while (out.ell % p == 0) {
    out.ell /= p;
    ++out.s;
  }
  out.multiplicity = checked_pow(p, out.s);
  out.factorization.unit = field.one();

  std::vector<std::pair<Poly<Gf>, std::uint64_t>> tagged;
  for (std::uint64_t d : divisors(out.ell)) {
    CyclotomicBlock block;
    block.d = d;
    block.residue_degree = multiplicative_order_mod(p % d, d);
    block.factor_count = euler_phi(d) / block.residue_degree;
    const Factorization phi = factor(cyclotomic_mod_p(d, p), seed);
    for (const auto& entry : phi.factors) {
      block.factors.push_back(entry.factor);
      tagged.emplace_back(entry.factor, d);
    }
    out.blocks.push_back(std::move(block));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  for (auto& [f, d] : tagged) {
    out.factorization.factors.push_back({f, static_cast<unsigned>(out.multiplicity)});
    out.divisor_of_factor.push_back(d);
  }
  return out;
}

}  // namespace mdft
