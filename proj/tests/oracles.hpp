#pragma once

// Brute-force reference computations, deliberately independent of the
// library's algorithms. Only plain integers and vectors are used here.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using IntPoly = std::vector<u64>;  // ascending coefficients mod p

inline u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  for (u64 i = 0; i < e; ++i) r = r * (b % m) % m;
  return r;
}

/// Order of a mod p by repeated multiplication.
inline u64 order_mod(u64 a, u64 p) {
  u64 x = a % p;
  for (u64 k = 1; k < p; ++k) {
    if (x == 1) return k;
    x = x * a % p;
  }
  return 0;
}

inline void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

/// Remainder of a by a monic b over F_p.
inline IntPoly rem_monic(IntPoly a, const IntPoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p * p - c * b[j] % p) % p;
    trim(a);
  }
  return a;
}

/// Multiplication in F_p[t]/(m) on coefficient vectors of length k.
inline IntPoly ext_mul(const IntPoly& a, const IntPoly& b, const IntPoly& m, u64 p) {
  IntPoly r = rem_monic(mul(a, b, p), m, p);
  r.resize(m.size() - 1, 0);
  return r;
}

/// All monic polynomials of the given degree over F_p.
inline std::vector<IntPoly> monics(std::size_t degree, u64 p) {
  std::vector<IntPoly> out;
  u64 count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= p;
  for (u64 code = 0; code < count; ++code) {
    IntPoly f(degree + 1, 0);
    u64 c = code;
    for (std::size_t i = 0; i < degree; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[degree] = 1;
    out.push_back(f);
  }
  return out;
}

/// Irreducibility by trial division with every monic of degree <= n/2.
inline bool irreducible(const IntPoly& f, u64 p) {
  const std::size_t n = f.size() - 1;
  if (n < 1) return false;
  for (std::size_t d = 1; 2 * d <= n; ++d)
    for (const auto& g : monics(d, p))
      if (rem_monic(f, g, p).empty()) return false;
  return true;
}

/// Distinct cores reached by removing rim p-hooks in every possible order.
/// Partitions are weakly decreasing vectors of positive parts.
inline void all_cores(std::vector<int> lambda, int p, std::set<std::pair<std::vector<int>, int>>& out, int removed = 0) {
  bool any = false;
  const int rows = static_cast<int>(lambda.size());
  // A rim hook is determined by its top-right cell (i, lambda[i]-1) and
  // bottom-left cell (b, j); we test every box (i, j) for hook length p.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int leg = 0;
      for (int r = i + 1; r < rows && lambda[r] > j; ++r) ++leg;
      const int arm = lambda[i] - j - 1;
      if (arm + leg + 1 != p) continue;
      any = true;
      const int b = i + leg;
      std::vector<int> mu = lambda;
      for (int r = i; r < b; ++r) mu[r] = lambda[r + 1] - 1;
      mu[b] = j;
      while (!mu.empty() && mu.back() == 0) mu.pop_back();
      all_cores(mu, p, out, removed + 1);
    }
  }
  if (!any) out.insert({lambda, removed});
}

}  // namespace oracle

namespace oracle {

inline IntPoly ext_add(const IntPoly& a, const IntPoly& b, u64 p) {
  IntPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

inline IntPoly ext_pow(IntPoly a, u64 e, const IntPoly& m, u64 p) {
  IntPoly r(m.size() - 1, 0);
  r[0] = 1;
  for (u64 i = 0; i < e; ++i) r = ext_mul(r, a, m, p);
  return r;
}

/// Schoolbook O(N^2) transform mod a prime with plain integers.
inline std::vector<u64> dft_mod_p(const std::vector<u64>& v, u64 alpha, u64 p) {
  const u64 n = v.size();
  std::vector<u64> f(n, 0);
  for (u64 k = 0; k < n; ++k)
    for (u64 j = 0; j < n; ++j) f[k] = (f[k] + v[j] * pow_mod(alpha, j * k, p)) % p;
  return f;
}

}  // namespace oracle
