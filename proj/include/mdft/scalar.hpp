#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mdft {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational from_int(const Rational&, std::int64_t v) { return Rational(static_cast<long>(v)); }

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

/// Exact field scalars usable by the generic polynomial and matrix code.
///
/// `from_int(like, n)` builds n·1 in the same field as `like`; finite-field
/// elements need it because their parent field travels with the value.
/// Never capture arithmetic results with `auto`: gmpxx returns expression
/// templates that dangle.
template <class T>
concept FieldScalar = std::copyable<T> && requires(const T& a, const T& b, std::int64_t n) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { from_int(a, n) } -> std::convertible_to<T>;
};

static_assert(FieldScalar<Rational>);

namespace detail {
// Unqualified call so argument-dependent lookup finds is_zero overloads
// declared after this header; members named is_zero cannot hide it here.
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

}  // namespace mdft
