#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mdft/fields.hpp"
#include "mdft/matrix.hpp"
#include "mdft/symmetric_group.hpp"

namespace mdft {

/// Largest n for the modular group-algebra routines.
inline constexpr unsigned kMaxModularDegree = 6;

/// An element of F_p[S_n]: coefficients indexed by SymmetricGroup::elements().
class GroupAlgebraElement {
 public:
  /// The zero element. Throws std::invalid_argument unless p is prime and 1 <= n <= 6.
  GroupAlgebraElement(unsigned n, std::uint64_t p);
  static GroupAlgebraElement identity(unsigned n, std::uint64_t p);
  static GroupAlgebraElement basis(unsigned n, std::uint64_t p, const Permutation& sigma);

  unsigned degree() const { return n_; }
  std::uint64_t characteristic() const { return p_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }
  std::uint32_t coefficient(std::size_t index) const { return coeffs_[index]; }
  std::uint32_t coefficient(const Permutation& sigma) const;
  /// Stores v mod p.
  void set(std::size_t index, std::int64_t v);
  bool is_zero() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  /// Convolution (a ⊛ b)(σ) = Σ_τ a(τ) b(τ^{-1}σ).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GroupAlgebraElement scaled(std::uint64_t c) const;
  GroupAlgebraElement pow(std::uint64_t e) const;
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) = default;

  /// Nonzero coefficients keyed by one-line permutation strings such as "132".
  std::map<std::string, std::uint64_t> to_map() const;
  std::vector<Gf> to_field_vector() const;

 private:
  void require_compatible(const GroupAlgebraElement& other) const;
  unsigned n_;
  std::uint64_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// One class sum per cycle type, in partition order; they form a basis of the center.
std::vector<GroupAlgebraElement> class_sums(unsigned n, std::uint64_t p);

/// Central primitive orthogonal idempotents of F_p[S_n].
struct IdempotentSet {
  unsigned n = 0;
  std::uint64_t p = 0;
  std::vector<GroupAlgebraElement> idempotents;
  /// dim F_p[S_n]·e_i.
  std::vector<std::size_t> block_dimensions;
};

/// Splits the center Z = span(class sums): starting from e = 1, a seeded
/// random z with z^p = z in eZ is drawn, its minimal polynomial is factored
/// and Bézout projectors split e. A component is final when the
/// Frobenius-fixed part of eZ is one-dimensional. Sorted by (block dimension,
/// coefficient vector).
IdempotentSet central_idempotents(unsigned n, std::uint64_t p, std::uint64_t seed = 0);

/// dim {z ∈ eZ : z^p = z}, computed directly in the group algebra. Equals the
/// number of primitive central idempotents below e; 1 certifies primitivity.
std::size_t frobenius_fixed_dimension(const GroupAlgebraElement& e);

struct IdempotentAxioms {
  bool central = false;      // commutes with every group element
  bool idempotent = false;   // e_i ⊛ e_i = e_i
  bool orthogonal = false;   // e_i ⊛ e_j = 0 for i != j
  bool complete = false;     // Σ e_i = 1
  bool primitive = false;    // frobenius_fixed_dimension(e_i) = 1
  bool all() const { return central && idempotent && orthogonal && complete && primitive; }
};

IdempotentAxioms check_idempotent_axioms(const IdempotentSet& set);

/// v ⊛ e.
GroupAlgebraElement block_project(const GroupAlgebraElement& v, const GroupAlgebraElement& e);

struct BlockRange {
  std::size_t start;
  std::size_t size;
};

/// The change of basis between the group basis and a basis adapted to
/// F_p[S_n] = ⊕ F_p[S_n]e_i. `basis` has as columns, block after block, the
/// pivot rows of the reduced row-echelon form of {σ ⊛ e_i : σ ∈ S_n};
/// `transform` = basis^{-1} maps group coordinates to block coordinates.
struct ModularDft {
  IdempotentSet idempotents;
  Matrix<Gf> basis{0, 0, Gf()};
  Matrix<Gf> transform{0, 0, Gf()};
  std::vector<BlockRange> layout;
};

ModularDft modular_dft_matrix(std::uint64_t p, unsigned n, std::uint64_t seed = 0);

/// Matrix of x ↦ x ⊛ w on group coordinates (column σ holds σ ⊛ w).
Matrix<Gf> right_multiplication_matrix(const GroupAlgebraElement& w);

/// True when every entry outside the diagonal blocks of the layout is zero.
bool is_block_diagonal(const Matrix<Gf>& m, const std::vector<BlockRange>& layout);

}  // namespace mdft
