#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mdft {

using PrimePowers = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);

/// Prime factorization, primes ascending: trial division by small primes,
/// then Pollard-Brent on the cofactor. factor_integer(1) is empty.
PrimePowers factor_integer(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// base^exp, throwing std::overflow_error past 2^63.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Least k >= 1 with a^k = 1 mod n. Requires gcd(a, n) = 1 and n >= 1.
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n);

/// Merges b into a (exponents add), keeping primes ascending.
void merge_prime_powers(PrimePowers& a, const PrimePowers& b);

/// If q = p^r for a prime p, returns (p, r).
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q);

}  // namespace mdft
