#include "mdft/symmetric_group.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace mdft {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(const std::vector<unsigned>& one_line) {
  std::vector<bool> seen(one_line.size(), false);
  for (unsigned v : one_line) {
    if (v < 1 || v > one_line.size() || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(one_line.size()));
    }
    seen[v - 1] = true;
    img_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  return Permutation(v);
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<unsigned> v;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(static_cast<unsigned>(std::stoul(item)));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation '" + text + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + text + "'");
      v.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  return Permutation(v);
}

std::vector<unsigned> Permutation::one_line() const {
  std::vector<unsigned> out;
  for (auto v : img_) out.push_back(v + 1u);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (unsigned i = 0; i < degree(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::vector<unsigned> Permutation::cycle_type() const {
  std::vector<unsigned> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (unsigned len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::string Permutation::to_string() const {
  std::string out;
  for (unsigned i = 0; i < degree(); ++i) {
    if (degree() > 9 && i > 0) out += ",";
    out += std::to_string(img_[i] + 1u);
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degrees differ");
  Permutation out = b;
  for (unsigned i = 0; i < b.degree(); ++i) out.img_[i] = a.img_[b.img_[i]];
  return out;
}

// ---------------------------------------------------------------------------
// SymmetricGroup

namespace {
constexpr unsigned kMaxGroupDegree = 8;
constexpr unsigned kMaxTableDegree = 6;
}  // namespace

SymmetricGroup::SymmetricGroup(unsigned n) : n_(n) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    elements_.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  for (const auto& p : elements_) inverse_.push_back(static_cast<std::uint32_t>(index_of(p.inverse())));
  if (n <= kMaxTableDegree) {
    table_.resize(order() * order());
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        table_[a * order() + b] = static_cast<std::uint32_t>(index_of(elements_[a] * elements_[b]));
  }
}

const SymmetricGroup& SymmetricGroup::get(unsigned n) {
  if (n < 1 || n > kMaxGroupDegree) {
    throw std::invalid_argument("symmetric group degree must satisfy 1 <= n <= 8, got " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::unique_ptr<SymmetricGroup> cache[kMaxGroupDegree + 1];
  std::lock_guard lock(mutex);
  if (!cache[n]) cache[n].reset(new SymmetricGroup(n));
  return *cache[n];
}

std::size_t SymmetricGroup::index_of(const Permutation& p) const {
  if (p.degree() != n_) throw std::invalid_argument("permutation degree does not match the group");
  std::size_t rank = 0;
  for (unsigned i = 0; i < n_; ++i) {
    std::size_t smaller = 0;
    for (unsigned j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
    rank = rank * (n_ - i) + smaller;
  }
  return rank;
}

std::size_t SymmetricGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b];
  return index_of(elements_[a] * elements_[b]);
}

std::vector<Permutation> enumerate_group(unsigned n) { return SymmetricGroup::get(n).elements(); }

// ---------------------------------------------------------------------------
// Partitions and tableaux

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

unsigned size_of(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0u); }

void tableaux_rec(const Partition& shape, unsigned next, unsigned n, std::vector<std::vector<unsigned>>& rows,
                  std::vector<StandardTableau>& out) {
  if (next > n) {
    out.push_back({shape, rows});
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (rows[r].size() >= shape[r]) continue;
    if (r > 0 && rows[r - 1].size() <= rows[r].size()) continue;
    rows[r].push_back(next);
    tableaux_rec(shape, next + 1, n, rows, out);
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  Partition prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
  return out + ")";
}

void validate_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0 || (i > 0 && lambda[i] > lambda[i - 1])) {
      throw std::invalid_argument(to_string(lambda) + " is not a partition (parts must be positive and weakly decreasing)");
    }
  }
}

std::vector<unsigned> StandardTableau::reading_word() const {
  std::vector<unsigned> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  validate_partition(lambda);
  std::vector<StandardTableau> out;
  std::vector<std::vector<unsigned>> rows(lambda.size());
  tableaux_rec(lambda, 1, size_of(lambda), rows, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::uint64_t hook_length_dim(const Partition& lambda) {
  validate_partition(lambda);
  const unsigned n = size_of(lambda);
  std::uint64_t num = 1;
  for (unsigned i = 2; i <= n; ++i) num *= i;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (unsigned j = 0; j < lambda[i]; ++j) {
      unsigned leg = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      den *= (lambda[i] - j - 1) + leg + 1;
    }
  }
  return num / den;
}

PCore p_core(const Partition& lambda, unsigned p) {
  validate_partition(lambda);
  if (p < 2) throw std::invalid_argument("p_core: p must be at least 2");
  const std::size_t r = lambda.size();
  std::vector<unsigned> beta;
  for (std::size_t i = 0; i < r; ++i) beta.push_back(lambda[i] + static_cast<unsigned>(r - 1 - i));
  unsigned weight = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (auto& b : beta) {
      if (b >= p && std::find(beta.begin(), beta.end(), b - p) == beta.end()) {
        b -= p;
        ++weight;
        moved = true;
      }
    }
  }
  std::sort(beta.rbegin(), beta.rend());
  Partition core;
  for (std::size_t i = 0; i < r; ++i) {
    const unsigned part = beta[i] - static_cast<unsigned>(r - 1 - i);
    if (part > 0) core.push_back(part);
  }
  return {core, weight};
}

// ---------------------------------------------------------------------------
// Specht modules

namespace {
constexpr unsigned kMaxSpechtDegree = 7;
using Sparse = std::map<std::size_t, long>;
}  // namespace

struct SpechtRepresentation::Impl {
  std::unordered_map<std::uint64_t, std::size_t> tabloid_index;
  std::vector<Sparse> basis_vectors;  // E_{T_k}
  std::vector<std::size_t> pivot_tabloids;  // {T_j}
  Matrix<Rational> pivot_inverse{0, 0, Rational(0)};
  std::mutex mutex;
  std::vector<std::unique_ptr<Matrix<Rational>>> cache;

  std::uint64_t code_of(const std::vector<std::vector<unsigned>>& rows, unsigned n) const {
    std::vector<unsigned> row_of(n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (unsigned e : rows[r]) row_of[e - 1] = static_cast<unsigned>(r);
    std::uint64_t code = 0;
    for (unsigned e = n; e-- > 0;) code = code * rows.size() + row_of[e];
    return code;
  }

  std::size_t tabloid(const std::vector<std::vector<unsigned>>& rows, unsigned n) {
    const std::uint64_t code = code_of(rows, n);
    auto [it, inserted] = tabloid_index.emplace(code, tabloid_index.size());
    return it->second;
  }

  // E_T = Σ_{σ in column group} sign(σ) {σ T}.
  Sparse polytabloid(const std::vector<std::vector<unsigned>>& rows, unsigned n) {
    std::vector<std::vector<std::size_t>> column_cells;  // row indices of each column
    for (unsigned c = 0; c < rows.front().size(); ++c) {
      std::vector<std::size_t> cells;
      for (std::size_t r = 0; r < rows.size() && rows[r].size() > c; ++r) cells.push_back(r);
      column_cells.push_back(cells);
    }
    Sparse out;
    std::vector<std::vector<unsigned>> current = rows;
    // Iterate over every combination of permutations of the column entries.
    std::function<void(std::size_t, int)> rec = [&](std::size_t col, int sign) {
      if (col == column_cells.size()) {
        out[tabloid(current, n)] += sign;
        return;
      }
      const auto& cells = column_cells[col];
      std::vector<unsigned> entries;
      for (auto r : cells) entries.push_back(rows[r][col]);
      std::vector<unsigned> perm(entries.size());
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        for (std::size_t i = 0; i < cells.size(); ++i) current[cells[i]][col] = entries[perm[i]];
        rec(col + 1, sign * Permutation(one_based(perm)).sign());
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (std::size_t i = 0; i < cells.size(); ++i) current[cells[i]][col] = entries[i];
    };
    rec(0, 1);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  static std::vector<unsigned> one_based(const std::vector<unsigned>& v) {
    std::vector<unsigned> out;
    for (auto x : v) out.push_back(x + 1);
    return out;
  }
};

SpechtRepresentation::SpechtRepresentation(Partition lambda)
    : lambda_(std::move(lambda)), n_(size_of(lambda_)), impl_(std::make_unique<Impl>()) {
  validate_partition(lambda_);
  if (n_ < 1 || n_ > kMaxSpechtDegree) throw std::invalid_argument("Specht modules are built for 1 <= n <= 7");
  tableaux_ = standard_tableaux(lambda_);
  const std::size_t d = tableaux_.size();
  for (const auto& t : tableaux_) {
    impl_->pivot_tabloids.push_back(impl_->tabloid(t.rows, n_));
    impl_->basis_vectors.push_back(impl_->polytabloid(t.rows, n_));
  }
  Matrix<Rational> pivots(d, d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& v = impl_->basis_vectors[k];
      if (auto it = v.find(impl_->pivot_tabloids[j]); it != v.end()) pivots(j, k) = Rational(it->second);
    }
  }
  impl_->pivot_inverse = mdft::inverse(pivots);
  impl_->cache.resize(SymmetricGroup::get(n_).order());
}

SpechtRepresentation::~SpechtRepresentation() = default;
SpechtRepresentation::SpechtRepresentation(SpechtRepresentation&&) noexcept = default;
SpechtRepresentation& SpechtRepresentation::operator=(SpechtRepresentation&&) noexcept = default;

const Matrix<Rational>& SpechtRepresentation::matrix(const Permutation& sigma) const {
  if (sigma.degree() != n_) {
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) + " acting on " +
                                to_string(lambda_) + ", a shape of size " + std::to_string(n_));
  }
  const std::size_t index = SymmetricGroup::get(n_).index_of(sigma);
  std::lock_guard lock(impl_->mutex);
  if (impl_->cache[index]) return *impl_->cache[index];
  const std::size_t d = tableaux_.size();
  auto m = std::make_unique<Matrix<Rational>>(d, d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    auto rows = tableaux_[k].rows;
    for (auto& row : rows)
      for (auto& e : row) e = sigma[e - 1] + 1;
    const Sparse target = impl_->polytabloid(rows, n_);
    std::vector<Rational> rhs(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
      if (auto it = target.find(impl_->pivot_tabloids[j]); it != target.end()) rhs[j] = Rational(it->second);
    }
    const std::vector<Rational> c = impl_->pivot_inverse * rhs;
    // Σ_j c_j E_{T_j} must reproduce σ·E_{T_k} on every tabloid.
    std::map<std::size_t, Rational> combo;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(c[j])) continue;
      for (const auto& [t, v] : impl_->basis_vectors[j]) combo[t] += c[j] * v;
    }
    std::erase_if(combo, [](const auto& kv) { return is_zero(kv.second); });
    bool ok = combo.size() == target.size();
    for (const auto& [t, v] : target) {
      auto it = combo.find(t);
      ok = ok && it != combo.end() && it->second == v;
    }
    if (!ok) throw std::logic_error("Specht straightening failed for " + to_string(lambda_));
    for (std::size_t j = 0; j < d; ++j) (*m)(j, k) = c[j];
  }
  impl_->cache[index] = std::move(m);
  return *impl_->cache[index];
}

Matrix<Rational> specht_matrix(const Partition& lambda, const Permutation& sigma) {
  validate_partition(lambda);
  if (size_of(lambda) != sigma.degree()) {
    throw std::invalid_argument("shape " + to_string(lambda) + " does not match a permutation of degree " +
                                std::to_string(sigma.degree()));
  }
  for (const auto& rep : specht_family(sigma.degree()))
    if (rep.shape() == lambda) return rep.matrix(sigma);
  throw std::logic_error("specht_matrix: partition not found");
}

const std::vector<SpechtRepresentation>& specht_family(unsigned n) {
  if (n < 1 || n > kMaxSpechtDegree) throw std::invalid_argument("Specht modules are built for 1 <= n <= 7");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<SpechtRepresentation>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<SpechtRepresentation> family;
    for (const auto& lambda : partitions(n)) family.emplace_back(lambda);
    it = cache.emplace(n, std::move(family)).first;
  }
  return it->second;
}

}  // namespace mdft
