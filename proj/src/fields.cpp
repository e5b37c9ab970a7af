#include "mdft/fields.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "mdft/number_theory.hpp"
#include "mdft/polynomials.hpp"

namespace mdft {

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint64_t> place;  // p^i, i < k
  // Log/antilog tables for small extension fields; empty otherwise.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  mutable std::once_flag generator_once;
  mutable std::uint64_t generator_code = 0;
};

}  // namespace detail

namespace {

using detail::FieldData;
constexpr unsigned kMaxDigits = 64;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

using Digits = std::array<std::uint64_t, kMaxDigits>;

void decode_digits(const FieldData& f, std::uint64_t code, Digits& out) {
  for (unsigned i = 0; i < f.k; ++i) {
    out[i] = code % f.p;
    code /= f.p;
  }
}

std::uint64_t encode_digits(const FieldData& f, const Digits& d) {
  std::uint64_t code = 0;
  for (unsigned i = f.k; i-- > 0;) code = code * f.p + d[i];
  return code;
}

std::uint64_t add_codes(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.k == 1) {
    const std::uint64_t s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  if (f.p == 2) return a ^ b;
  Digits da, db;
  decode_digits(f, a, da);
  decode_digits(f, b, db);
  for (unsigned i = 0; i < f.k; ++i) {
    const std::uint64_t s = da[i] + db[i];
    da[i] = s >= f.p ? s - f.p : s;
  }
  return encode_digits(f, da);
}

std::uint64_t neg_code(const FieldData& f, std::uint64_t a) {
  if (f.k == 1) return a == 0 ? 0 : f.p - a;
  if (f.p == 2) return a;
  Digits d;
  decode_digits(f, a, d);
  for (unsigned i = 0; i < f.k; ++i) d[i] = d[i] == 0 ? 0 : f.p - d[i];
  return encode_digits(f, d);
}

std::uint64_t mul_codes_slow(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  Digits da, db;
  decode_digits(f, a, da);
  decode_digits(f, b, db);
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  for (unsigned i = 0; i < f.k; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < f.k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
  }
  // Reduce by the monic modulus from the top.
  for (unsigned deg = 2 * f.k - 2; deg >= f.k; --deg) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (unsigned i = 0; i < f.k; ++i) {
      const std::uint64_t sub = c * f.modulus[i] % f.p;
      const std::uint64_t idx = deg - f.k + i;
      prod[idx] = (prod[idx] + f.p - sub) % f.p;
    }
  }
  Digits out;
  for (unsigned i = 0; i < f.k; ++i) out[i] = prod[i];
  return encode_digits(f, out);
}

std::uint64_t mul_codes(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.k == 1) return a * b % f.p;
  if (a == 0 || b == 0) return 0;
  if (!f.exp_table.empty()) {
    const std::uint64_t e = (std::uint64_t{f.log_table[a]} + f.log_table[b]) % (f.q - 1);
    return f.exp_table[e];
  }
  return mul_codes_slow(f, a, b);
}

std::uint64_t pow_codes(const FieldData& f, std::uint64_t a, std::uint64_t e) {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (f.k == 1) return pow_mod(a, e, f.p);
  if (!f.exp_table.empty()) {
    const std::uint64_t l = mul_mod(f.log_table[a], e % (f.q - 1), f.q - 1);
    return f.exp_table[l];
  }
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul_codes_slow(f, result, a);
    a = mul_codes_slow(f, a, a);
    e >>= 1;
  }
  return result;
}

bool is_generator_code(const FieldData& f, std::uint64_t code, const PrimePowers& group_factors) {
  if (code == 0) return false;
  for (auto [prime, exp] : group_factors) {
    if (pow_codes(f, code, (f.q - 1) / prime) == 1) return false;
  }
  return true;
}

std::uint64_t find_generator(const FieldData& f) {
  if (f.q == 2) return 1;
  const PrimePowers group_factors = factor_integer(f.q - 1);
  for (std::uint64_t code = 1; code < f.q; ++code) {
    if (is_generator_code(f, code, group_factors)) return code;
  }
  throw std::logic_error("find_generator: no generator found; modulus is not irreducible");
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<std::uint64_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>> fields;
  std::map<std::pair<std::uint64_t, unsigned>, const FieldData*> by_degree;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

GaloisField GaloisField::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("GaloisField::prime: " + std::to_string(p) + " is not a prime below 2^31");
  }
  return intern(p, {0, 1}, false);
}

GaloisField GaloisField::extension(std::uint64_t p, std::vector<std::uint32_t> modulus) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("GaloisField::extension: " + std::to_string(p) + " is not a prime below 2^31");
  }
  while (!modulus.empty() && modulus.back() % p == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() % p != 1) {
    throw std::invalid_argument("GaloisField::extension: modulus must be monic of degree >= 1");
  }
  for (auto& c : modulus) c %= p;
  if (modulus.size() == 2) return prime(p);
  return intern(p, std::move(modulus), true);
}

GaloisField GaloisField::of_degree(std::uint64_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("GaloisField::of_degree: degree must be positive");
  if (k == 1) return prime(p);
  const GaloisField base = prime(p);
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    if (auto it = reg.by_degree.find({p, k}); it != reg.by_degree.end()) return GaloisField(it->second);
  }
  const std::uint64_t q = checked_pow(p, k);
  if (q > kMaxOrder) throw std::invalid_argument("GaloisField::of_degree: field order exceeds 2^62");
  for (std::uint64_t lower = 0; lower < q; ++lower) {
    std::vector<std::uint32_t> coeffs(k + 1);
    std::uint64_t rest = lower;
    for (unsigned i = 0; i < k; ++i) {
      coeffs[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    coeffs[k] = 1;
    if (coeffs[0] == 0) continue;
    std::vector<Gf> poly_coeffs;
    for (auto c : coeffs) poly_coeffs.push_back(base.element(c));
    if (!is_irreducible(Poly<Gf>(base.zero(), std::move(poly_coeffs)))) continue;
    const GaloisField field = intern(p, std::move(coeffs), false);
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    reg.by_degree.emplace(std::pair{p, k}, field.data_);
    return field;
  }
  throw std::logic_error("GaloisField::of_degree: no irreducible polynomial found");
}

GaloisField GaloisField::intern(std::uint64_t p, std::vector<std::uint32_t> modulus, bool check_irreducible) {
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mutex);
    if (auto it = reg.fields.find({p, modulus}); it != reg.fields.end()) return GaloisField(it->second.get());
  }
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  if (k >= kMaxDigits) throw std::invalid_argument("GaloisField: extension degree too large");
  const std::uint64_t q = checked_pow(p, k);
  if (q > kMaxOrder) throw std::invalid_argument("GaloisField: field order exceeds 2^62");
  if (check_irreducible) {
    const GaloisField base = prime(p);
    std::vector<Gf> poly_coeffs;
    for (auto c : modulus) poly_coeffs.push_back(base.element(c));
    if (!is_irreducible(Poly<Gf>(base.zero(), std::move(poly_coeffs)))) {
      throw std::invalid_argument("GaloisField::extension: modulus is reducible over F_" + std::to_string(p));
    }
  }

  auto data = std::make_unique<FieldData>();
  data->p = p;
  data->k = k;
  data->q = q;
  data->modulus = modulus;
  data->place.resize(k);
  for (unsigned i = 0; i < k; ++i) data->place[i] = checked_pow(p, i);
  if (k > 1 && q <= kTableLimit) {
    const std::uint64_t g = find_generator(*data);
    data->exp_table.resize(q - 1);
    data->log_table.assign(q, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
      data->exp_table[i] = static_cast<std::uint32_t>(x);
      data->log_table[x] = static_cast<std::uint32_t>(i);
      x = mul_codes_slow(*data, x, g);
    }
  }

  std::lock_guard lock(reg.mutex);
  auto [it, inserted] = reg.fields.emplace(std::pair{p, std::move(modulus)}, std::move(data));
  return GaloisField(it->second.get());
}

std::uint64_t GaloisField::characteristic() const { return data_->p; }
unsigned GaloisField::degree() const { return data_->k; }
std::uint64_t GaloisField::order() const { return data_->q; }
std::span<const std::uint32_t> GaloisField::modulus() const { return data_->modulus; }
GaloisField GaloisField::prime_subfield() const { return prime(data_->p); }

Gf GaloisField::zero() const { return Gf(data_, 0); }
Gf GaloisField::one() const { return Gf(data_, 1); }

Gf GaloisField::element(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Gf(data_, static_cast<std::uint64_t>(r));
}

Gf GaloisField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > data_->k) {
    throw std::invalid_argument("GaloisField::from_coefficients: more than " + std::to_string(data_->k) +
                                " coefficients");
  }
  Digits d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % data_->p;
  return Gf(data_, encode_digits(*data_, d));
}

Gf GaloisField::decode(std::uint64_t code) const {
  if (code >= data_->q) throw std::invalid_argument("GaloisField::decode: code out of range");
  return Gf(data_, code);
}

Gf GaloisField::generator() const {
  std::call_once(data_->generator_once, [d = data_] {
    d->generator_code = d->exp_table.empty() ? find_generator(*d) : d->exp_table.size() > 1 ? d->exp_table[1] : 1;
  });
  return Gf(data_, data_->generator_code);
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "F_" << data_->p;
  if (data_->k > 1) {
    os << "[t]/(" << to_string(Poly<Gf>(prime_subfield().zero(), [&] {
      std::vector<Gf> c;
      for (auto m : data_->modulus) c.push_back(prime_subfield().element(m));
      return c;
    }())) << ")";
  }
  return os.str();
}

GaloisField Gf::field() const {
  if (field_ == nullptr) throw std::logic_error("Gf: element has no field");
  return GaloisField(field_);
}

std::vector<std::uint32_t> Gf::coefficients() const {
  const FieldData& f = *field().data_;
  Digits d;
  decode_digits(f, code_, d);
  return {d.begin(), d.begin() + f.k};
}

void Gf::require_same_field(const Gf& other, const char* op) const {
  if (field_ == nullptr || field_ != other.field_) {
    throw FieldMismatchError(std::string("Gf ") + op + ": operands belong to different fields");
  }
}

Gf& Gf::operator+=(const Gf& rhs) {
  require_same_field(rhs, "add");
  code_ = add_codes(*field_, code_, rhs.code_);
  return *this;
}

Gf& Gf::operator-=(const Gf& rhs) {
  require_same_field(rhs, "sub");
  code_ = add_codes(*field_, code_, neg_code(*field_, rhs.code_));
  return *this;
}

Gf& Gf::operator*=(const Gf& rhs) {
  require_same_field(rhs, "mul");
  code_ = mul_codes(*field_, code_, rhs.code_);
  return *this;
}

Gf& Gf::operator/=(const Gf& rhs) {
  require_same_field(rhs, "div");
  return *this *= rhs.inverse();
}

Gf Gf::operator-() const { return Gf(field_, neg_code(*field().data_, code_)); }

Gf Gf::inverse() const {
  const FieldData& f = *field().data_;
  if (code_ == 0) throw std::domain_error("Gf: division by zero in " + GaloisField(field_).describe());
  if (!f.exp_table.empty()) {
    return Gf(field_, f.exp_table[(f.q - 1 - f.log_table[code_]) % (f.q - 1)]);
  }
  return Gf(field_, pow_codes(f, code_, f.q - 2));
}

Gf Gf::pow(std::uint64_t exponent) const { return Gf(field_, pow_codes(*field().data_, code_, exponent)); }

Gf from_int(const Gf& like, std::int64_t v) { return like.field().element(v); }

Gf from_rational(const Gf& like, const Rational& r) {
  const GaloisField field = like.field();
  const unsigned long p = static_cast<unsigned long>(field.characteristic());
  const unsigned long num = mpz_fdiv_ui(r.get_num_mpz_t(), p);
  const unsigned long den = mpz_fdiv_ui(r.get_den_mpz_t(), p);
  if (den == 0) {
    throw std::domain_error("from_rational: denominator of " + to_string(r) + " vanishes in characteristic " +
                            std::to_string(p));
  }
  return field.element(static_cast<std::int64_t>(num)) / field.element(static_cast<std::int64_t>(den));
}

std::string to_string(const Gf& x) {
  const GaloisField field = x.field();
  if (field.is_prime_field()) return std::to_string(x.encode());
  const auto c = x.coefficients();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    const bool unit = c[i] == 1 && i > 0;
    if (!unit) out += std::to_string(c[i]);
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::uint64_t multiplicative_order(const Gf& x) {
  if (x.is_zero()) throw std::domain_error("multiplicative_order: zero is not a unit");
  std::uint64_t order = x.field().order() - 1;
  for (auto [prime, exp] : factor_integer(order)) {
    for (unsigned e = 0; e < exp; ++e) {
      if (!x.pow(order / prime).is_one()) break;
      order /= prime;
    }
  }
  return order;
}

Gf primitive_root(std::uint64_t p) { return GaloisField::prime(p).generator(); }

Gf nth_root_of_unity(const GaloisField& field, std::uint64_t n) {
  const std::uint64_t group_order = field.order() - 1;
  if (n == 0 || group_order % n != 0) {
    throw std::invalid_argument("nth_root_of_unity: N = " + std::to_string(n) + " does not divide q-1 = " +
                                std::to_string(group_order) + " in " + field.describe());
  }
  return field.generator().pow(group_order / n);
}

Gf frobenius(const Gf& x, unsigned r) {
  const std::uint64_t p = x.field().characteristic();
  Gf y = x;
  for (unsigned i = 0; i < r; ++i) y = y.pow(p);
  return y;
}

std::optional<Gf> sqrt_in_field(const Gf& a) {
  const GaloisField field = a.field();
  const std::uint64_t q = field.order();
  if (a.is_zero()) return a;
  if (q <= kTableLimit) {
    for (std::uint64_t code = 1; code < q; ++code) {
      const Gf s = field.decode(code);
      if (s * s == a) return s;
    }
    return std::nullopt;
  }
  if (field.characteristic() == 2) return a.pow(q / 2);
  if (!a.pow((q - 1) / 2).is_one()) return std::nullopt;

  std::uint64_t odd = q - 1;
  unsigned two_adic = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++two_adic;
  }
  Gf non_residue = field.one();
  for (std::uint64_t code = 2; code < q; ++code) {
    non_residue = field.decode(code);
    if (non_residue.pow((q - 1) / 2) == -field.one()) break;
  }
  unsigned m = two_adic;
  Gf c = non_residue.pow(odd);
  Gf t = a.pow(odd);
  Gf r = a.pow((odd + 1) / 2);
  while (!t.is_one()) {
    unsigned i = 1;
    Gf t2 = t * t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    Gf b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  const Gf other = -r;
  return other.encode() < r.encode() ? other : r;
}

Gf lift(const Gf& x, const GaloisField& target) {
  const GaloisField source = x.field();
  if (source == target) return x;
  if (source.is_prime_field() && source.characteristic() == target.characteristic()) {
    return target.element(static_cast<std::int64_t>(x.encode()));
  }
  throw FieldMismatchError("lift: " + source.describe() + " does not embed canonically into " + target.describe());
}

}  // namespace mdft
