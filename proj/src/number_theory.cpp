#include "mdft/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mdft {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// A nontrivial factor of the odd composite n (Brent's variant of Pollard rho).
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t block = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace

PrimePowers factor_integer(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  PrimePowers out;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n == 1) return out;
  std::vector<std::uint64_t> primes;
  split_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t prime : primes) {
    if (!out.empty() && out.back().first == prime) {
      ++out.back().second;
    } else {
      out.emplace_back(prime, 1);
    }
  }
  return out;
}

void merge_prime_powers(PrimePowers& a, const PrimePowers& b) {
  for (auto [prime, exp] : b) {
    auto it = std::lower_bound(a.begin(), a.end(), prime, [](const auto& entry, std::uint64_t v) { return entry.first < v; });
    if (it != a.end() && it->first == prime) {
      it->second += exp;
    } else {
      a.insert(it, {prime, exp});
    }
  }
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [prime, exp] : factor_integer(n)) {
    const std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [prime, exp] : factor_integer(n)) phi = phi / prime * (prime - 1);
  return phi;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 63) / base) {
      throw std::overflow_error("checked_pow: " + std::to_string(base) + "^" + std::to_string(exp) +
                                " exceeds 2^63");
    }
    r *= base;
  }
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicative_order_mod: modulus 0");
  if (n == 1) return 1;
  if (gcd_u64(a % n, n) != 1) {
    throw std::invalid_argument("multiplicative_order_mod: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(n));
  }
  // The order divides the exponent of (Z/n)^x, which divides phi(n).
  std::uint64_t order = euler_phi(n);
  for (auto [prime, exp] : factor_integer(order)) {
    for (unsigned e = 0; e < exp && order % prime == 0; ++e) {
      if (pow_mod(a, order / prime, n) != 1) break;
      order /= prime;
    }
  }
  return order;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = factor_integer(q);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

}  // namespace mdft
