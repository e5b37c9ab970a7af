#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdft/scalar.hpp"

namespace mdft {

class Gf;

namespace detail {
struct FieldData;
}

/// Raised when two operands live in different fields.
class FieldMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Handle to a finite field F_{p^k} = F_p[t]/(m(t)).
///
/// Fields are interned: constructing the same presentation twice yields the
/// same handle, and handles compare by identity. Prime fields are the k = 1
/// case with modulus t. Handles are trivially copyable and never dangle.
class GaloisField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static GaloisField prime(std::uint64_t p);

  /// F_p[t]/(modulus). The modulus is given by ascending coefficients, must be
  /// monic and irreducible over F_p; irreducibility is checked.
  static GaloisField extension(std::uint64_t p, std::vector<std::uint32_t> modulus);

  /// F_{p^k} presented by the least monic irreducible of degree k, where
  /// candidates t^k + c_{k-1}t^{k-1} + ... + c_0 are scanned in increasing
  /// order of the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
  static GaloisField of_degree(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  bool is_prime_field() const { return degree() == 1; }
  /// Ascending coefficients, length degree()+1, leading 1.
  std::span<const std::uint32_t> modulus() const;
  GaloisField prime_subfield() const;

  Gf zero() const;
  Gf one() const;
  /// The image of the integer v.
  Gf element(std::int64_t v) const;
  /// Element c_0 + c_1 t + ...; coefficients are reduced mod p, at most degree() of them.
  Gf from_coefficients(std::span<const std::uint32_t> coeffs) const;
  /// Inverse of Gf::encode.
  Gf decode(std::uint64_t code) const;

  /// Canonical multiplicative generator: the element of least encoding whose
  /// order is q-1. For prime fields this is the smallest primitive root.
  Gf generator() const;

  std::string describe() const;

  friend bool operator==(GaloisField a, GaloisField b) { return a.data_ == b.data_; }

 private:
  explicit GaloisField(const detail::FieldData* data) : data_(data) {}
  static GaloisField intern(std::uint64_t p, std::vector<std::uint32_t> modulus, bool check_irreducible);

  const detail::FieldData* data_;
  friend class Gf;
};

/// An element of a GaloisField.
///
/// Stored as the integer code c_0 + c_1 p + ... + c_{k-1} p^{k-1} of its
/// residue polynomial. A default-constructed Gf has no field and may only be
/// assigned to.
class Gf {
 public:
  Gf() = default;

  GaloisField field() const;
  bool has_field() const { return field_ != nullptr; }

  /// Canonical encoding; for prime fields the residue in [0, p).
  std::uint64_t encode() const { return code_; }
  /// Residue polynomial coefficients, ascending, length field().degree().
  std::vector<std::uint32_t> coefficients() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  /// Throws std::domain_error for zero.
  Gf inverse() const;
  Gf pow(std::uint64_t exponent) const;

  Gf& operator+=(const Gf& rhs);
  Gf& operator-=(const Gf& rhs);
  Gf& operator*=(const Gf& rhs);
  /// Throws std::domain_error when dividing by zero.
  Gf& operator/=(const Gf& rhs);

  friend Gf operator+(Gf a, const Gf& b) { return a += b; }
  friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
  friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
  friend Gf operator/(Gf a, const Gf& b) { return a /= b; }
  Gf operator-() const;

  friend bool operator==(const Gf& a, const Gf& b) { return a.field_ == b.field_ && a.code_ == b.code_; }

 private:
  Gf(const detail::FieldData* field, std::uint64_t code) : field_(field), code_(code) {}
  void require_same_field(const Gf& other, const char* op) const;

  const detail::FieldData* field_ = nullptr;
  std::uint64_t code_ = 0;
  friend class GaloisField;
};

inline bool is_zero(const Gf& x) { return x.is_zero(); }
Gf from_int(const Gf& like, std::int64_t v);
/// Exact image of a rational in the field of `like`; throws std::domain_error
/// when the denominator vanishes there.
Gf from_rational(const Gf& like, const Rational& r);

std::string to_string(const Gf& x);

static_assert(FieldScalar<Gf>);

/// Least k >= 1 with x^k = 1. Throws std::domain_error for zero.
std::uint64_t multiplicative_order(const Gf& x);

/// Smallest positive integer generating F_p^x, as an element of F_p.
Gf primitive_root(std::uint64_t p);

/// alpha = g^{(q-1)/N} for the canonical generator g; alpha has order exactly N.
/// Throws std::invalid_argument if N does not divide q-1.
Gf nth_root_of_unity(const GaloisField& field, std::uint64_t n);

/// x^{p^r}.
Gf frobenius(const Gf& x, unsigned r = 1);

/// A square root of `a`, or nullopt when `a` is not a square. Of the two
/// roots s and -s the one with smaller encoding is returned. Exhaustive
/// search for q <= 2^16, Tonelli-Shanks above.
std::optional<Gf> sqrt_in_field(const Gf& a);

/// Embeds an element of the prime field (or of `target` itself) into `target`.
Gf lift(const Gf& x, const GaloisField& target);

}  // namespace mdft
