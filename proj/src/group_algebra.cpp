#include "mdft/group_algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "mdft/number_theory.hpp"
#include "mdft/polynomials.hpp"

namespace mdft {

namespace {

using Row = std::vector<std::uint32_t>;

std::uint32_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint32_t>(a * b % p); }
std::uint32_t inv_p(std::uint64_t a, std::uint64_t p) { return static_cast<std::uint32_t>(pow_mod(a, p - 2, p)); }

struct ModpRref {
  std::vector<Row> rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form over F_p on plain residues; same pivoting rule as rref().
ModpRref rref_modp(std::vector<Row> m, std::uint64_t p) {
  ModpRref out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    const std::uint32_t inv = inv_p(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mulp(m[r][j], inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = p - m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j] != 0) m[i][j] = static_cast<std::uint32_t>((m[i][j] + f * m[r][j]) % p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank_modp(std::vector<Row> m, std::uint64_t p) { return rref_modp(std::move(m), p).rows.size(); }

std::vector<Row> inverse_modp(const std::vector<Row>& m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::vector<Row> aug(n, Row(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m[i].begin(), m[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  auto r = rref_modp(std::move(aug), p);
  if (r.rows.size() < n || r.pivots[n - 1] >= n) throw std::logic_error("inverse_modp: singular matrix");
  std::vector<Row> out;
  for (auto& row : r.rows) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  return out;
}

void require_degree(unsigned n) {
  if (n < 1 || n > kMaxModularDegree) {
    throw std::invalid_argument("group algebra computations need 1 <= n <= " + std::to_string(kMaxModularDegree) +
                                ", got n = " + std::to_string(n));
  }
}

// The center as an algebra in class-sum coordinates.
struct Center {
  std::size_t r;
  std::uint64_t p;
  std::vector<std::uint32_t> structure;  // a[i][j][k]: C_i C_j = Σ_k a_ijk C_k
  Row one;

  Row mul(const Row& x, const Row& y) const {
    Row out(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (y[j] == 0) continue;
        const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
        for (std::size_t k = 0; k < r; ++k) {
          const std::uint32_t a = structure[(i * r + j) * r + k];
          if (a != 0) out[k] = static_cast<std::uint32_t>((out[k] + xy * a) % p);
        }
      }
    }
    return out;
  }
  Row pow(Row x, std::uint64_t e) const {
    Row result = one;
    while (e > 0) {
      if (e & 1) result = mul(result, x);
      e >>= 1;
      if (e > 0) x = mul(x, x);
    }
    return result;
  }
};

Center build_center(unsigned n, std::uint64_t p, std::vector<std::size_t>& class_of) {
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const auto parts = partitions(n);
  class_of.assign(g.order(), 0);
  std::vector<std::size_t> representative(parts.size(), g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto ct = g.element(x).cycle_type();
    class_of[x] = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), ct) - parts.begin());
    if (representative[class_of[x]] == g.order()) representative[class_of[x]] = x;
  }
  Center z{parts.size(), p, std::vector<std::uint32_t>(parts.size() * parts.size() * parts.size(), 0), Row(parts.size(), 0)};
  // Coefficient of g_k in C_i C_j = #{x ∈ C_i : x^{-1} g_k ∈ C_j}.
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::size_t y = g.multiply(g.inverse(x), representative[k]);
      auto& a = z.structure[(class_of[x] * z.r + class_of[y]) * z.r + k];
      a = static_cast<std::uint32_t>((a + 1) % p);
    }
  }
  z.one[class_of[0]] = 1;
  return z;
}

// Rows spanning {v ∈ span(rows) : F v = v} for the Frobenius matrix given by
// its action on a basis of the center.
std::vector<Row> fixed_space(const Center& z, const std::vector<Row>& frob_columns) {
  // Kernel of (F - I)^T-free form: solve Σ_i c_i (F(C_i) - C_i) = 0.
  Matrix<Gf> m(z.r, z.r, GaloisField::prime(z.p).zero());
  const GaloisField f = GaloisField::prime(z.p);
  for (std::size_t i = 0; i < z.r; ++i) {
    for (std::size_t k = 0; k < z.r; ++k) {
      const std::int64_t v = static_cast<std::int64_t>(frob_columns[i][k]) - (i == k ? 1 : 0);
      m(k, i) = f.element(v);
    }
  }
  std::vector<Row> out;
  for (const auto& v : kernel(m)) {
    Row row;
    for (const auto& x : v) row.push_back(static_cast<std::uint32_t>(x.encode()));
    out.push_back(std::move(row));
  }
  return out;
}

// Basis (rref rows) of e·V.
std::vector<Row> restrict_to(const Center& z, const Row& e, const std::vector<Row>& space) {
  std::vector<Row> prods;
  for (const auto& v : space) prods.push_back(z.mul(e, v));
  return rref_modp(std::move(prods), z.p).rows;
}

Poly<Gf> minimal_polynomial(const Center& z, const Row& x, const Row& e) {
  const GaloisField f = GaloisField::prime(z.p);
  std::vector<Row> powers{e};
  for (;;) {
    powers.push_back(z.mul(powers.back(), x));
    Matrix<Gf> m(z.r, powers.size(), f.zero());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < z.r; ++i) m(i, j) = f.element(powers[j][i]);
    const auto ker = kernel(m);
    if (ker.empty()) continue;
    return Poly<Gf>(f.zero(), ker.front()).monic();
  }
}

Row evaluate_at(const Center& z, const Poly<Gf>& poly, const Row& x, const Row& e) {
  Row acc(z.r, 0);
  for (std::size_t i = poly.coefficients().size(); i-- > 0;) {
    acc = z.mul(acc, x);
    const std::uint64_t c = poly.coefficients()[i].encode();
    for (std::size_t k = 0; k < z.r; ++k) acc[k] = static_cast<std::uint32_t>((acc[k] + c * e[k]) % z.p);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement::GroupAlgebraElement(unsigned n, std::uint64_t p) : n_(n), p_(p) {
  require_degree(n);
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("p must be a prime below 2^31");
  coeffs_.assign(SymmetricGroup::get(n).order(), 0);
}

GroupAlgebraElement GroupAlgebraElement::identity(unsigned n, std::uint64_t p) {
  GroupAlgebraElement e(n, p);
  e.coeffs_[0] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(unsigned n, std::uint64_t p, const Permutation& sigma) {
  GroupAlgebraElement e(n, p);
  e.coeffs_[SymmetricGroup::get(n).index_of(sigma)] = 1;
  return e;
}

std::uint32_t GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  return coeffs_[SymmetricGroup::get(n_).index_of(sigma)];
}

void GroupAlgebraElement::set(std::size_t index, std::int64_t v) {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  coeffs_.at(index) = static_cast<std::uint32_t>(((v % p) + p) % p);
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

void GroupAlgebraElement::require_compatible(const GroupAlgebraElement& other) const {
  if (n_ != other.n_ || p_ != other.p_) {
    throw std::invalid_argument("group-algebra elements live in different algebras (n or p differ)");
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + rhs.coeffs_[i]) % p_);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = static_cast<std::uint32_t>((std::uint64_t{coeffs_[i]} + p_ - rhs.coeffs_[i]) % p_);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  a.require_compatible(b);
  const SymmetricGroup& g = SymmetricGroup::get(a.n_);
  std::vector<std::uint64_t> acc(a.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.coeffs_[x] == 0) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.coeffs_[y] == 0) continue;
      auto& slot = acc[g.multiply(x, y)];
      slot = (slot + std::uint64_t{a.coeffs_[x]} * b.coeffs_[y]) % a.p_;
    }
  }
  GroupAlgebraElement out(a.n_, a.p_);
  for (std::size_t i = 0; i < acc.size(); ++i) out.coeffs_[i] = static_cast<std::uint32_t>(acc[i]);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::uint64_t c) const {
  GroupAlgebraElement out = *this;
  for (auto& x : out.coeffs_) x = mulp(x, c % p_, p_);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::pow(std::uint64_t e) const {
  GroupAlgebraElement result = identity(n_, p_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::map<std::string, std::uint64_t> GroupAlgebraElement::to_map() const {
  std::map<std::string, std::uint64_t> out;
  const SymmetricGroup& g = SymmetricGroup::get(n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out[g.element(i).to_string()] = coeffs_[i];
  return out;
}

std::vector<Gf> GroupAlgebraElement::to_field_vector() const {
  const GaloisField f = GaloisField::prime(p_);
  std::vector<Gf> out;
  for (auto c : coeffs_) out.push_back(f.element(c));
  return out;
}

// ---------------------------------------------------------------------------
// Center and idempotents

std::vector<GroupAlgebraElement> class_sums(unsigned n, std::uint64_t p) {
  require_degree(n);
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const auto parts = partitions(n);
  std::vector<GroupAlgebraElement> out(parts.size(), GroupAlgebraElement(n, p));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto k = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), g.element(x).cycle_type()) - parts.begin());
    out[k].set(x, out[k].coefficient(x) + 1);
  }
  return out;
}

IdempotentSet central_idempotents(unsigned n, std::uint64_t p, std::uint64_t seed) {
  require_degree(n);
  std::vector<std::size_t> class_of;
  const Center z = build_center(n, p, class_of);
  std::vector<Row> frob;
  for (std::size_t i = 0; i < z.r; ++i) {
    Row c(z.r, 0);
    c[i] = 1;
    frob.push_back(z.pow(c, p));
  }
  const std::vector<Row> fixed = fixed_space(z, frob);
  std::mt19937_64 rng(seed);

  std::vector<Row> done;
  std::vector<Row> work{z.one};
  while (!work.empty()) {
    const Row e = work.back();
    work.pop_back();
    const std::vector<Row> local = restrict_to(z, e, fixed);
    if (local.size() <= 1) {
      done.push_back(e);
      continue;
    }
    for (;;) {
      Row x(z.r, 0);
      for (const auto& v : local) {
        const std::uint64_t c = rng() % p;
        for (std::size_t k = 0; k < z.r; ++k) x[k] = static_cast<std::uint32_t>((x[k] + c * v[k]) % p);
      }
      const Poly<Gf> m = minimal_polynomial(z, x, e);
      if (m.degree() < 2) continue;
      // m divides x^p - x, so it is a product of distinct linear factors.
      const auto fac = factor(m, seed);
      for (const auto& entry : fac.factors) {
        const Poly<Gf> cofactor = m / entry.factor;
        const auto bez = xgcd(cofactor, entry.factor);
        work.push_back(evaluate_at(z, bez.u * cofactor, x, e));
      }
      break;
    }
  }

  const auto sums = class_sums(n, p);
  IdempotentSet out{n, p, {}, {}};
  for (const auto& coords : done) {
    GroupAlgebraElement e(n, p);
    for (std::size_t i = 0; i < z.r; ++i) e += sums[i].scaled(coords[i]);
    out.idempotents.push_back(std::move(e));
  }
  const SymmetricGroup& g = SymmetricGroup::get(n);
  std::vector<std::pair<std::size_t, GroupAlgebraElement>> keyed;
  for (auto& e : out.idempotents) {
    std::vector<Row> span;
    for (std::size_t s = 0; s < g.order(); ++s) span.push_back((GroupAlgebraElement::basis(n, p, g.element(s)) * e).coefficients());
    keyed.emplace_back(rank_modp(std::move(span), p), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.coefficients() < b.second.coefficients();
  });
  out.idempotents.clear();
  for (auto& [dim, e] : keyed) {
    out.block_dimensions.push_back(dim);
    out.idempotents.push_back(std::move(e));
  }
  return out;
}

std::size_t frobenius_fixed_dimension(const GroupAlgebraElement& e) {
  const unsigned n = e.degree();
  const std::uint64_t p = e.characteristic();
  std::vector<Row> span;
  for (const auto& c : class_sums(n, p)) span.push_back((e * c).coefficients());
  const auto basis_rows = rref_modp(std::move(span), p).rows;
  // Kernel dimension of z ↦ z^p - z on span(basis_rows).
  std::vector<Row> images;
  for (const auto& row : basis_rows) {
    GroupAlgebraElement b(n, p);
    for (std::size_t i = 0; i < row.size(); ++i) b.set(i, row[i]);
    images.push_back((b.pow(p) - b).coefficients());
  }
  return basis_rows.size() - rank_modp(std::move(images), p);
}

IdempotentAxioms check_idempotent_axioms(const IdempotentSet& set) {
  IdempotentAxioms ax{true, true, true, true, true};
  const SymmetricGroup& g = SymmetricGroup::get(set.n);
  GroupAlgebraElement sum(set.n, set.p);
  for (std::size_t i = 0; i < set.idempotents.size(); ++i) {
    const auto& e = set.idempotents[i];
    sum += e;
    for (std::size_t s = 0; s < g.order() && ax.central; ++s) {
      const auto d = GroupAlgebraElement::basis(set.n, set.p, g.element(s));
      ax.central = d * e == e * d;
    }
    ax.idempotent = ax.idempotent && e * e == e;
    ax.primitive = ax.primitive && frobenius_fixed_dimension(e) == 1;
    for (std::size_t j = 0; j < set.idempotents.size(); ++j)
      if (i != j) ax.orthogonal = ax.orthogonal && (e * set.idempotents[j]).is_zero();
  }
  ax.complete = sum == GroupAlgebraElement::identity(set.n, set.p);
  return ax;
}

GroupAlgebraElement block_project(const GroupAlgebraElement& v, const GroupAlgebraElement& e) { return v * e; }

// ---------------------------------------------------------------------------
// Modular DFT matrix

ModularDft modular_dft_matrix(std::uint64_t p, unsigned n, std::uint64_t seed) {
  ModularDft out;
  out.idempotents = central_idempotents(n, p, seed);
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const std::size_t size = g.order();
  std::vector<Row> columns;
  for (const auto& e : out.idempotents.idempotents) {
    std::vector<Row> span;
    for (std::size_t s = 0; s < size; ++s) span.push_back((GroupAlgebraElement::basis(n, p, g.element(s)) * e).coefficients());
    auto r = rref_modp(std::move(span), p);
    out.layout.push_back({columns.size(), r.rows.size()});
    for (auto& row : r.rows) columns.push_back(std::move(row));
  }
  if (columns.size() != size) throw std::logic_error("modular_dft_matrix: blocks do not span the group algebra");
  const GaloisField f = GaloisField::prime(p);
  out.basis = Matrix<Gf>(size, size, f.zero());
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t i = 0; i < size; ++i) out.basis(i, j) = f.element(columns[j][i]);
  // basis = columnsᵀ, so basis^{-1} = (columns^{-1})ᵀ.
  const auto inv = inverse_modp(columns, p);
  out.transform = Matrix<Gf>(size, size, f.zero());
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out.transform(i, j) = f.element(inv[j][i]);
  return out;
}

Matrix<Gf> right_multiplication_matrix(const GroupAlgebraElement& w) {
  const SymmetricGroup& g = SymmetricGroup::get(w.degree());
  const GaloisField f = GaloisField::prime(w.characteristic());
  Matrix<Gf> m(g.order(), g.order(), f.zero());
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto col = GroupAlgebraElement::basis(w.degree(), w.characteristic(), g.element(s)) * w;
    for (std::size_t i = 0; i < g.order(); ++i) m(i, s) = f.element(col.coefficient(i));
  }
  return m;
}

bool is_block_diagonal(const Matrix<Gf>& m, const std::vector<BlockRange>& layout) {
  std::vector<std::size_t> block_of(m.rows(), layout.size());
  for (std::size_t b = 0; b < layout.size(); ++b)
    for (std::size_t i = layout[b].start; i < layout[b].start + layout[b].size && i < m.rows(); ++i) block_of[i] = b;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (block_of[i] != block_of[j] && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace mdft
