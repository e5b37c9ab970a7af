#pragma once

#include <cstdint>
#include <vector>

#include "mdft/fields.hpp"
#include "mdft/matrix.hpp"
#include "mdft/polynomials.hpp"

namespace mdft {

/// f_k = Σ_j v_j α^{jk}, schoolbook. Throws std::invalid_argument unless α
/// has multiplicative order exactly N = v.size().
std::vector<Gf> dft_root_of_unity(const std::vector<Gf>& v, const Gf& alpha);

/// v_j = N^{-1} Σ_k f_k α^{-jk}. Additionally throws std::invalid_argument
/// when the characteristic divides N.
std::vector<Gf> idft_root_of_unity(const std::vector<Gf>& f, const Gf& alpha);

/// (u ⊛ v)_k = Σ_{i+j ≡ k mod N} u_i v_j.
std::vector<Gf> cyclic_convolution(const std::vector<Gf>& u, const std::vector<Gf>& v);

/// The Chinese-remainder transform F[x]/(x^N - 1) → ⊕_i F[x]/(n_i), where
/// n_i = P_i^{m_i} runs over the prime-power factors of x^N - 1 in canonical
/// order. F is F_p, or with `splitting_field` the least extension F_{p^f}
/// over which x^ℓ - 1 splits (ℓ the p-free part of N).
class CrtTransform {
 public:
  CrtTransform(std::uint64_t n, std::uint64_t p, bool splitting_field = false, std::uint64_t seed = 0);

  std::uint64_t n() const { return n_; }
  std::uint64_t p() const { return p_; }
  const GaloisField& field() const { return field_; }
  /// Irreducible P_i, their multiplicities m_i, and the moduli n_i = P_i^{m_i}.
  const std::vector<Poly<Gf>>& factors() const { return factors_; }
  const std::vector<unsigned>& multiplicities() const { return multiplicities_; }
  const std::vector<Poly<Gf>>& moduli() const { return moduli_; }

  /// Residues of h(x) = Σ h_i x^i modulo each n_i, each padded to length
  /// deg n_i. Entries of h may lie in F_p or in field(). Throws
  /// std::invalid_argument when h.size() != N.
  std::vector<std::vector<Gf>> forward(const std::vector<Gf>& h) const;

  /// h = Σ_i a_i E_i mod (x^N - 1) with E_i = M_i·(x^N-1)/n_i and
  /// M_i·(x^N-1)/n_i + v·n_i = 1. Throws std::invalid_argument for a
  /// spectrum whose shape does not match moduli().
  std::vector<Gf> inverse(const std::vector<std::vector<Gf>>& spectrum) const;

 private:
  std::uint64_t n_;
  std::uint64_t p_;
  GaloisField field_;
  Poly<Gf> modulus_;  // x^N - 1
  std::vector<Poly<Gf>> factors_;
  std::vector<unsigned> multiplicities_;
  std::vector<Poly<Gf>> moduli_;
  std::vector<Poly<Gf>> idempotents_;  // E_i
};

std::vector<std::vector<Gf>> crt_dft(const std::vector<Gf>& h, std::uint64_t p, bool splitting_field = false,
                                     std::uint64_t seed = 0);
std::vector<Gf> crt_idft(const std::vector<std::vector<Gf>>& spectrum, std::uint64_t n, std::uint64_t p,
                         bool splitting_field = false, std::uint64_t seed = 0);

/// Unitary cyclic DFT U = A/√N, A_ij = α^{ij}, over a finite field with the
/// conjugation x ↦ x^q.
struct UnitaryCyclicReport {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  /// Least m with N | q^{2m} - 1; the working field is F_{q^{2m}}.
  unsigned m = 0;
  /// F_{q^{2m}}, or F_{q^{4m}} when √N had to be adjoined.
  GaloisField field = GaloisField::prime(2);
  bool sqrt_via_extension = false;
  Gf alpha;
  Gf sqrt_n;
  Matrix<Gf> u{0, 0, Gf()};
  /// U·U* with U* the conjugate transpose.
  Matrix<Gf> gram{0, 0, Gf()};
  /// q ≡ -1 mod N.
  bool q_is_minus_one_mod_n = false;
  /// x ↦ x^q has order two on the working field.
  bool conjugation_is_involution = false;
  /// (A A*)_{ik} = N δ_{i ≡ -qk mod N}.
  bool kronecker_structure = false;
  /// N / (√N · conj(√N)); U·U* = c·(A A*)/N with this c.
  Gf normalization;
  bool unitary = false;
  bool order_four = false;
  /// char_poly(U) divides (x^4 - 1)^N, i.e. every eigenvalue is a fourth root of unity.
  bool eigenvalues_fourth_roots = false;
};

/// Throws std::invalid_argument unless q is a prime power with p ∤ N, or
/// when the working field would exceed 2^62 elements.
/// `force_quadratic_extension` adjoins √N by x^2 - N even when N is already a
/// square, doubling the working field.
UnitaryCyclicReport unitary_cyclic_dft_ff(std::uint64_t n, std::uint64_t q, bool force_quadratic_extension = false);

}  // namespace mdft
