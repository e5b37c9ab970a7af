#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdft/fields.hpp"
#include "mdft/matrix.hpp"
#include "mdft/scalar.hpp"

namespace mdft {

/// A permutation of {1..n}, stored 0-based: img[i] is the image of i+1, minus one.
class Permutation {
 public:
  Permutation() = default;
  /// One-line form, 1-based. Throws std::invalid_argument unless a bijection of {1..n}.
  explicit Permutation(const std::vector<unsigned>& one_line);
  static Permutation identity(unsigned n);
  /// Parses "132" (n <= 9) or "1,3,2".
  static Permutation parse(const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  /// 0-based image of 0-based i.
  unsigned operator[](unsigned i) const { return img_[i]; }
  std::vector<unsigned> one_line() const;

  Permutation inverse() const;
  int sign() const;
  /// Cycle lengths, weakly decreasing.
  std::vector<unsigned> cycle_type() const;
  /// "132" for n <= 9, otherwise comma separated.
  std::string to_string() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<std::uint8_t> img_;
};

/// S_n with elements in lexicographic order of one-line forms (index 0 is the
/// identity). Instances are shared per n; 1 <= n <= 8.
class SymmetricGroup {
 public:
  /// Throws std::invalid_argument outside 1 <= n <= 8.
  static const SymmetricGroup& get(unsigned n);

  unsigned degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  /// Lehmer-code rank, the position in elements().
  std::size_t index_of(const Permutation& p) const;
  /// Index of element(a) * element(b); tabulated for n <= 6.
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

 private:
  explicit SymmetricGroup(unsigned n);
  unsigned n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;  // order()^2 entries when n <= 6
};

std::vector<Permutation> enumerate_group(unsigned n);

/// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

/// Partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(unsigned n);
std::string to_string(const Partition& lambda);
/// Throws std::invalid_argument unless weakly decreasing with positive parts.
void validate_partition(const Partition& lambda);

/// Rows of entries 1..n, strictly increasing along rows and down columns.
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<unsigned>> rows;
  /// Entries read row by row, top row first.
  std::vector<unsigned> reading_word() const;
};

/// All standard tableaux of the shape, ordered lexicographically by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// n! / ∏ hook lengths.
std::uint64_t hook_length_dim(const Partition& lambda);

struct PCore {
  Partition core;
  unsigned weight;
};

/// Removes rim p-hooks via beta-numbers (sliding beads down p runners).
PCore p_core(const Partition& lambda, unsigned p);

/// The Specht module S^λ over Q in the basis of standard polytabloids.
///
/// ρ(σ) has as column k the coordinates of σ·E_{T_k}; σ·E_T is written in the
/// standard basis by solving against the tabloids of the standard tableaux
/// and the solution is checked on every tabloid coordinate. Entries are
/// integers. Matrices are computed on first use and cached per group index.
class SpechtRepresentation {
 public:
  /// Throws std::invalid_argument for an invalid partition or |λ| > 7.
  explicit SpechtRepresentation(Partition lambda);
  ~SpechtRepresentation();
  SpechtRepresentation(SpechtRepresentation&&) noexcept;
  SpechtRepresentation& operator=(SpechtRepresentation&&) noexcept;

  const Partition& shape() const { return lambda_; }
  unsigned degree() const { return n_; }
  std::size_t dimension() const { return tableaux_.size(); }
  const std::vector<StandardTableau>& basis() const { return tableaux_; }

  /// Throws std::invalid_argument when σ has the wrong degree.
  const Matrix<Rational>& matrix(const Permutation& sigma) const;

 private:
  struct Impl;
  Partition lambda_;
  unsigned n_;
  std::vector<StandardTableau> tableaux_;
  std::unique_ptr<Impl> impl_;
};

/// ρ_λ(σ) over Q.
Matrix<Rational> specht_matrix(const Partition& lambda, const Permutation& sigma);

/// All Specht representations of S_n in partition order, shared per n.
const std::vector<SpechtRepresentation>& specht_family(unsigned n);

// ---------------------------------------------------------------------------
// Transforms on the group algebra. A group-algebra element is a coefficient
// vector indexed by SymmetricGroup::elements().

/// Copies an integer matrix into the field of `like`.
template <FieldScalar T>
Matrix<T> convert_matrix(const Matrix<Rational>& m, const T& zero);

template <>
inline Matrix<Rational> convert_matrix(const Matrix<Rational>& m, const Rational&) {
  return m;
}

template <>
inline Matrix<Gf> convert_matrix(const Matrix<Rational>& m, const Gf& zero) {
  Matrix<Gf> out(m.rows(), m.cols(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_rational(zero, m(i, j));
  return out;
}

/// Largest n accepted by sn_dft / sn_idft.
inline constexpr unsigned kMaxTransformDegree = 6;

namespace detail {
inline const SymmetricGroup& group_for_length(std::size_t length, unsigned max_n) {
  for (unsigned n = 1; n <= max_n; ++n) {
    if (SymmetricGroup::get(n).order() == length) return SymmetricGroup::get(n);
  }
  throw std::invalid_argument("group-algebra element length " + std::to_string(length) + " is not n! for 1 <= n <= " +
                              std::to_string(max_n));
}
}  // namespace detail

/// (f ⊛ g)(σ) = Σ_τ f(τ) g(τ^{-1}σ); with this convention the transform of
/// f ⊛ g is the blockwise product f̂ ĝ.
template <FieldScalar T>
std::vector<T> convolve(const std::vector<T>& f, const std::vector<T>& g) {
  if (f.size() != g.size() || f.empty()) throw std::invalid_argument("convolve: lengths differ");
  const SymmetricGroup& group = detail::group_for_length(f.size(), 8);
  std::vector<T> out(f.size(), T(f[0] - f[0]));
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (is_zero(f[a])) continue;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (is_zero(g[b])) continue;
      const std::size_t c = group.multiply(a, b);
      out[c] = T(out[c] + f[a] * g[b]);
    }
  }
  return out;
}

/// f̂(λ) = Σ_a f(a) ρ_λ(a) for every partition λ of n, in partition order.
/// Throws std::invalid_argument for n > 6 or a length that is not n!.
template <FieldScalar T>
std::vector<Matrix<T>> sn_dft(const std::vector<T>& f) {
  if (f.empty()) throw std::invalid_argument("sn_dft: empty input");
  const SymmetricGroup& group = detail::group_for_length(f.size(), kMaxTransformDegree);
  const T zero = T(f[0] - f[0]);
  std::vector<Matrix<T>> out;
  for (const auto& rep : specht_family(group.degree())) {
    Matrix<T> acc(rep.dimension(), rep.dimension(), zero);
    for (std::size_t a = 0; a < group.order(); ++a) {
      if (is_zero(f[a])) continue;
      acc = acc + convert_matrix(rep.matrix(group.element(a)), zero) * f[a];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// f(a) = (1/n!) Σ_λ d_λ Tr(ρ_λ(a^{-1}) f̂(λ)). Throws std::invalid_argument
/// when n! is zero in the coefficient field or the shapes do not match S_n.
template <FieldScalar T>
std::vector<T> sn_idft(const std::vector<Matrix<T>>& coeffs, unsigned n) {
  if (n < 1 || n > kMaxTransformDegree) throw std::invalid_argument("sn_idft: need 1 <= n <= 6");
  const auto& family = specht_family(n);
  if (coeffs.size() != family.size()) throw std::invalid_argument("sn_idft: expected one matrix per partition of n");
  const T zero = T(coeffs[0](0, 0) - coeffs[0](0, 0));
  const SymmetricGroup& group = SymmetricGroup::get(n);
  const T order = from_int(zero, static_cast<std::int64_t>(group.order()));
  if (is_zero(order)) {
    throw std::invalid_argument("inverse transform requires the characteristic not to divide |G| = n! = " +
                                std::to_string(group.order()));
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (coeffs[k].rows() != family[k].dimension() || coeffs[k].cols() != family[k].dimension()) {
      throw std::invalid_argument("sn_idft: matrix for " + to_string(family[k].shape()) + " has the wrong size");
    }
  }
  std::vector<T> out(group.order(), zero);
  for (std::size_t a = 0; a < group.order(); ++a) {
    const Permutation inv = group.element(group.inverse(a));
    T acc = zero;
    for (std::size_t k = 0; k < family.size(); ++k) {
      const Matrix<T> r = convert_matrix(family[k].matrix(inv), zero);
      T trace = zero;
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) trace = T(trace + r(i, j) * coeffs[k](j, i));
      acc = T(acc + from_int(zero, static_cast<std::int64_t>(family[k].dimension())) * trace);
    }
    out[a] = T(acc / order);
  }
  return out;
}

}  // namespace mdft
