#include "mdft/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mdft/number_theory.hpp"

namespace mdft {

namespace {

void require_order(const Gf& alpha, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("transform length N must be positive");
  if (alpha.is_zero() || multiplicative_order(alpha) != n) {
    throw std::invalid_argument("alpha = " + to_string(alpha) + " does not have multiplicative order exactly N = " +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<Gf> dft_root_of_unity(const std::vector<Gf>& v, const Gf& alpha) {
  const std::uint64_t n = v.size();
  require_order(alpha, n);
  std::vector<Gf> out(n, alpha.field().zero());
  Gf step = alpha.field().one();  // α^k
  for (std::uint64_t k = 0; k < n; ++k, step *= alpha) {
    Gf acc = alpha.field().zero();
    for (std::uint64_t j = n; j-- > 0;) acc = acc * step + v[j];
    out[k] = acc;
  }
  return out;
}

std::vector<Gf> idft_root_of_unity(const std::vector<Gf>& f, const Gf& alpha) {
  const std::uint64_t n = f.size();
  if (n > 0 && n % alpha.field().characteristic() == 0) {
    throw std::invalid_argument("inverse transform requires p not dividing N (p = " +
                                std::to_string(alpha.field().characteristic()) + ", N = " + std::to_string(n) + ")");
  }
  require_order(alpha, n);
  std::vector<Gf> out = dft_root_of_unity(f, alpha.inverse());
  const Gf n_inv = alpha.field().element(static_cast<std::int64_t>(n % alpha.field().characteristic())).inverse();
  for (auto& x : out) x *= n_inv;
  return out;
}

std::vector<Gf> cyclic_convolution(const std::vector<Gf>& u, const std::vector<Gf>& v) {
  if (u.size() != v.size() || u.empty()) throw std::invalid_argument("cyclic_convolution: lengths must agree and be positive");
  const std::size_t n = u.size();
  std::vector<Gf> out(n, u[0].field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += u[i] * v[j];
  return out;
}

CrtTransform::CrtTransform(std::uint64_t n, std::uint64_t p, bool splitting_field, std::uint64_t seed)
    : n_(n), p_(p), field_(GaloisField::prime(p)), modulus_(field_.zero()) {
  if (n == 0) throw std::invalid_argument("CRT transform: N must be positive");
  if (splitting_field) {
    std::uint64_t ell = n;
    while (ell % p == 0) ell /= p;
    field_ = GaloisField::of_degree(p, static_cast<unsigned>(multiplicative_order_mod(p % ell, ell)));
  }
  modulus_ = Poly<Gf>::x_pow_minus_one(field_.zero(), n);
  for (const auto& [f, m] : factor(modulus_, seed).factors) {
    factors_.push_back(f);
    multiplicities_.push_back(m);
    moduli_.push_back(pow(f, m));
  }
  for (const auto& ni : moduli_) {
    const Poly<Gf> cofactor = modulus_ / ni;
    const auto bez = xgcd(cofactor, ni);
    if (!bez.gcd.is_one()) throw std::logic_error("CRT transform: moduli are not coprime");
    idempotents_.push_back(bez.u * cofactor % modulus_);
  }
}

std::vector<std::vector<Gf>> CrtTransform::forward(const std::vector<Gf>& h) const {
  if (h.size() != n_) {
    throw std::invalid_argument("CRT transform: signal has length " + std::to_string(h.size()) + ", expected N = " +
                                std::to_string(n_));
  }
  std::vector<Gf> lifted;
  for (const auto& x : h) lifted.push_back(lift(x, field_));
  const Poly<Gf> hx(field_.zero(), std::move(lifted));
  std::vector<std::vector<Gf>> out;
  for (const auto& ni : moduli_) {
    const Poly<Gf> r = hx % ni;
    std::vector<Gf> c = r.coefficients();
    c.resize(static_cast<std::size_t>(ni.degree()), field_.zero());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Gf> CrtTransform::inverse(const std::vector<std::vector<Gf>>& spectrum) const {
  if (spectrum.size() != moduli_.size()) {
    throw std::invalid_argument("CRT inverse: spectrum has " + std::to_string(spectrum.size()) + " components, expected " +
                                std::to_string(moduli_.size()));
  }
  Poly<Gf> acc(field_.zero());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (spectrum[i].size() != static_cast<std::size_t>(moduli_[i].degree())) {
      throw std::invalid_argument("CRT inverse: component " + std::to_string(i) + " has length " +
                                  std::to_string(spectrum[i].size()) + ", expected " + std::to_string(moduli_[i].degree()));
    }
    std::vector<Gf> c;
    for (const auto& x : spectrum[i]) c.push_back(lift(x, field_));
    acc += Poly<Gf>(field_.zero(), std::move(c)) * idempotents_[i];
  }
  std::vector<Gf> out = (acc % modulus_).coefficients();
  out.resize(n_, field_.zero());
  return out;
}

std::vector<std::vector<Gf>> crt_dft(const std::vector<Gf>& h, std::uint64_t p, bool splitting_field, std::uint64_t seed) {
  return CrtTransform(h.size(), p, splitting_field, seed).forward(h);
}

std::vector<Gf> crt_idft(const std::vector<std::vector<Gf>>& spectrum, std::uint64_t n, std::uint64_t p,
                         bool splitting_field, std::uint64_t seed) {
  return CrtTransform(n, p, splitting_field, seed).inverse(spectrum);
}

UnitaryCyclicReport unitary_cyclic_dft_ff(std::uint64_t n, std::uint64_t q, bool force_quadratic_extension) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  const auto [p, r] = *pp;
  if (n == 0) throw std::invalid_argument("N must be positive");
  if (n % p == 0) {
    throw std::invalid_argument("N = " + std::to_string(n) + " is divisible by the characteristic " + std::to_string(p) +
                                ", so no primitive N-th root of unity exists");
  }
  UnitaryCyclicReport rep;
  rep.n = n;
  rep.q = q;
  rep.m = static_cast<unsigned>(multiplicative_order_mod(mul_mod(q, q, n), n));
  rep.q_is_minus_one_mod_n = (q + 1) % n == 0;
  const unsigned degree_limit = 62;
  unsigned degree = 2 * rep.m * r;
  if (degree * std::log2(static_cast<double>(p)) > degree_limit) {
    throw std::invalid_argument("working field F_" + std::to_string(p) + "^" + std::to_string(degree) + " is too large");
  }
  GaloisField field = GaloisField::of_degree(p, degree);
  const Gf n_elem = field.element(static_cast<std::int64_t>(n % p));
  const auto root = sqrt_in_field(n_elem);
  if (!root || force_quadratic_extension) {
    // F_{q^{2m}}[x]/(x^2 - N) has q^{4m} elements; use that field's canonical presentation.
    degree *= 2;
    if (degree * std::log2(static_cast<double>(p)) > degree_limit) {
      throw std::invalid_argument("quadratic extension F_" + std::to_string(p) + "^" + std::to_string(degree) + " is too large");
    }
    field = GaloisField::of_degree(p, degree);
    rep.sqrt_via_extension = true;
  }
  rep.field = field;
  const Gf n_in_field = field.element(static_cast<std::int64_t>(n % p));
  rep.alpha = nth_root_of_unity(field, n);
  rep.sqrt_n = *sqrt_in_field(n_in_field);

  const auto conj = [r = r](const Gf& x) { return frobenius(x, r); };
  rep.conjugation_is_involution = true;
  for (std::uint64_t code = 0; code < std::min<std::uint64_t>(field.order(), 4096) && rep.conjugation_is_involution; ++code) {
    const Gf x = field.decode(code);
    rep.conjugation_is_involution = conj(conj(x)) == x;
  }
  // x ↦ x^q is an involution on F_{p^degree} iff degree | 2r; the scan above
  // agrees with that and doubles as a check on the generator.
  if (rep.conjugation_is_involution != (2 * r % degree == 0)) throw std::logic_error("conjugation involution check disagrees");

  Matrix<Gf> a(n, n, field.zero());
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) a(i, j) = rep.alpha.pow(i * j % n);
  rep.u = a * rep.sqrt_n.inverse();

  Matrix<Gf> a_star(n, n, field.zero());
  Matrix<Gf> u_star(n, n, field.zero());
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      a_star(j, i) = conj(a(i, j));
      u_star(j, i) = conj(rep.u(i, j));
    }
  }
  const Matrix<Gf> aa = a * a_star;
  rep.kronecker_structure = true;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t k = 0; k < n; ++k) {
      const bool hit = (i + mul_mod(q, k, n)) % n == 0;
      rep.kronecker_structure &= aa(i, k) == (hit ? n_in_field : field.zero());
    }
  }
  rep.normalization = n_in_field / (rep.sqrt_n * conj(rep.sqrt_n));
  rep.gram = rep.u * u_star;
  rep.unitary = rep.gram.is_identity();
  rep.order_four = mat_pow(rep.u, 4).is_identity();
  const Poly<Gf> x4 = Poly<Gf>::x_pow_minus_one(field.zero(), 4);
  rep.eigenvalues_fourth_roots = pow_mod(x4, n, char_poly(rep.u)).is_zero();
  return rep;
}

}  // namespace mdft
