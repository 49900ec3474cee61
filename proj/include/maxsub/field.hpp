#pragma once

// Exact scalars: arbitrary-precision rationals, prime fields F_p with a
// machine-word modulus, and simple extensions base[t]/(f) for a monic f.
//
// Fields are interned: two Field handles compare equal exactly when their
// canonical spec strings agree, and a handle stays valid for the lifetime of
// the process. Scalars are immutable values that carry their field.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "maxsub/error.hpp"

namespace maxsub {

enum class FieldKind { Rationals, PrimeField, SimpleExtension };

class Scalar;

namespace detail {
struct FieldData;
}

class Field {
 public:
  /// The rationals.
  Field();

  static Field rationals();
  static Field prime(std::uint64_t p);
  /// base[t]/(modulus); `modulus` is low-to-high and must be monic with
  /// degree >= 1. Irreducibility is checked by root search up to degree 3
  /// when the base allows it; otherwise it is recorded as unverified.
  static Field extension(const Field& base, std::vector<Scalar> modulus);
  /// `q` | `fp:<p>` | `ext:<base>:<comma-separated monic coeffs, low to high>`.
  static Field parse(std::string_view spec);

  FieldKind kind() const;
  bool is_rationals() const { return kind() == FieldKind::Rationals; }
  bool is_prime_field() const { return kind() == FieldKind::PrimeField; }
  bool is_extension() const { return kind() == FieldKind::SimpleExtension; }

  /// 0 for the rationals.
  std::uint64_t characteristic() const;
  /// Number of elements, when finite and representable in 64 bits.
  std::optional<std::uint64_t> cardinality() const;
  bool is_finite() const { return characteristic() != 0; }

  Field base() const;
  const std::vector<Scalar>& modulus() const;
  std::size_t extension_degree() const;
  bool irreducibility_verified() const;
  const std::string& spec() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_rational(const mpq_class& value) const;
  /// The class of t in base[t]/(f).
  Scalar generator() const;
  Scalar from_components(std::vector<Scalar> components) const;
  Scalar parse_scalar(std::string_view text) const;
  /// Enumerates a finite field: index in [0, cardinality).
  Scalar element_at(std::uint64_t index) const;

  bool operator==(const Field& other) const { return data_ == other.data_; }
  bool operator!=(const Field& other) const { return data_ != other.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_;

  friend class Scalar;
};

class Scalar {
 public:
  using Rep = std::variant<mpq_class, std::uint64_t, std::vector<Scalar>>;

  Scalar(Field field, Rep value);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  /// Coordinates over the base, trailing zeros trimmed.
  const std::vector<Scalar>& components() const;
  Scalar component(std::size_t i) const;

  Scalar inverse() const;
  Scalar pow(long long exponent) const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Field field_;
  Rep value_;
};

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t prime = 0;
  std::uint64_t characteristic = 0;
  const FieldData* base = nullptr;
  std::vector<Scalar> modulus;
  bool irreducible_verified = true;
  std::string spec;
};

inline const FieldData* intern(std::unique_ptr<FieldData> data) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<FieldData>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(data->spec);
  if (it != registry.end()) return it->second.get();
  const FieldData* raw = data.get();
  registry.emplace(raw->spec, std::move(data));
  return raw;
}

inline const FieldData* rationals_data() {
  static const FieldData* data = [] {
    auto d = std::make_unique<FieldData>();
    d->spec = "q";
    return intern(std::move(d));
  }();
  return data;
}

inline void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorCode::SpecMismatch, "operands live in " + a.spec() + " and " + b.spec());
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

inline std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

// Dense coefficient vectors over a field, low degree first, trimmed.

using Coeffs = std::vector<Scalar>;

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

inline Coeffs coeffs_add(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a.size() >= b.size() ? a : b;
  const Coeffs& shorter = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
  trim(out);
  return out;
}

inline Coeffs coeffs_neg(const Coeffs& a) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(-c);
  return out;
}

inline Coeffs coeffs_sub(const Coeffs& a, const Coeffs& b) { return coeffs_add(a, coeffs_neg(b)); }

inline Coeffs coeffs_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, a[0].field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Coeffs coeffs_scale(const Coeffs& a, const Scalar& s) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c * s);
  trim(out);
  return out;
}

/// Division with remainder; `b` must be nonzero.
inline std::pair<Coeffs, Coeffs> coeffs_divmod(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Coeffs rem = a;
  if (rem.size() < b.size()) return {Coeffs{}, rem};
  const Scalar lead_inv = b.back().inverse();
  Coeffs quot(rem.size() - b.size() + 1, b[0].field().zero());
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Scalar factor = rem[shift + b.size() - 1] * lead_inv;
    quot[shift] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= factor * b[j];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

/// g = gcd(a, m) together with s such that s*a == g (mod m).
inline std::pair<Coeffs, Coeffs> coeffs_half_ext_gcd(const Coeffs& a, const Coeffs& m) {
  Coeffs r0 = m, r1 = a;
  Coeffs s0, s1;
  if (!a.empty()) s1 = Coeffs{a[0].field().one()};
  while (!r1.empty()) {
    auto [q, r] = coeffs_divmod(r0, r1);
    Coeffs s2 = coeffs_sub(s0, coeffs_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {r0, s0};
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Splits on `sep` at bracket depth zero.
inline std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

inline mpq_class parse_rational(std::string_view raw) {
  std::string_view text = strip(raw);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
  }
  mpq_class value;
  if (value.set_str(std::string(text), 10) != 0)
    throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
  if (value.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

inline Scalar eval_coeffs(const Coeffs& poly, const Scalar& at) {
  Scalar acc = at.field().zero();
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * at + poly[i];
  return acc;
}

std::optional<bool> has_root(const Field& base, const Coeffs& poly);

}  // namespace detail

// ---------------------------------------------------------------------------
// Field

inline Field::Field() : data_(detail::rationals_data()) {}

inline Field Field::rationals() { return Field(); }

inline Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62))
    throw Error(ErrorCode::InvalidField, "prime modulus must lie in [2, 2^62), got " + std::to_string(p));
  mpz_class z(std::to_string(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  auto d = std::make_unique<detail::FieldData>();
  d->kind = FieldKind::PrimeField;
  d->prime = p;
  d->characteristic = p;
  d->spec = "fp:" + std::to_string(p);
  return Field(detail::intern(std::move(d)));
}

inline Field Field::extension(const Field& base, std::vector<Scalar> modulus) {
  detail::trim(modulus);
  if (modulus.size() < 2) throw Error(ErrorCode::InvalidField, "extension modulus must be non-constant");
  for (const auto& c : modulus) detail::check_same_field(base, c.field());
  if (!modulus.back().is_one()) throw Error(ErrorCode::InvalidField, "extension modulus must be monic");

  std::vector<std::string> parts;
  for (const auto& c : modulus) parts.push_back(c.to_string());
  const std::string spec = "ext:" + base.spec() + ":" + detail::join(parts, ",");

  bool verified = true;
  const std::size_t degree = modulus.size() - 1;
  if (degree == 1) {
    verified = true;
  } else if (degree <= 3) {
    auto root = detail::has_root(base, modulus);
    if (root.has_value() && *root)
      throw Error(ErrorCode::InvalidField, "modulus of " + spec + " has a root in the base, so it is reducible");
    verified = root.has_value();
  } else {
    verified = false;
  }

  auto d = std::make_unique<detail::FieldData>();
  d->kind = FieldKind::SimpleExtension;
  d->characteristic = base.characteristic();
  d->base = base.data_;
  d->modulus = std::move(modulus);
  d->irreducible_verified = verified;
  d->spec = spec;
  return Field(detail::intern(std::move(d)));
}

inline Field Field::parse(std::string_view raw) {
  std::string_view spec = detail::strip(raw);
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::string digits(spec.substr(3));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorCode::InvalidField, "bad prime in field spec '" + std::string(spec) + "'");
    mpz_class p(digits);
    if (p >= mpz_class(std::string("4611686018427387904")))
      throw Error(ErrorCode::InvalidField, "prime modulus too large in '" + std::string(spec) + "'");
    return prime(p.get_ui());
  }
  if (spec.rfind("ext:", 0) == 0) {
    std::string_view rest = spec.substr(4);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidField, "ext spec needs <base>:<coeffs>");
    Field base = parse(rest.substr(0, colon));
    std::vector<Scalar> modulus;
    for (const auto& part : detail::split_top_level(rest.substr(colon + 1), ',')) modulus.push_back(base.parse_scalar(part));
    return extension(base, std::move(modulus));
  }
  throw Error(ErrorCode::InvalidField, "unrecognized field spec '" + std::string(spec) + "'");
}

inline FieldKind Field::kind() const { return data_->kind; }
inline std::uint64_t Field::characteristic() const { return data_->characteristic; }
inline const std::string& Field::spec() const { return data_->spec; }
inline bool Field::irreducibility_verified() const { return data_->irreducible_verified; }

inline Field Field::base() const {
  if (!is_extension()) throw Error(ErrorCode::SpecMismatch, spec() + " is not an extension field");
  return Field(data_->base);
}

inline const std::vector<Scalar>& Field::modulus() const {
  if (!is_extension()) throw Error(ErrorCode::SpecMismatch, spec() + " is not an extension field");
  return data_->modulus;
}

inline std::size_t Field::extension_degree() const { return is_extension() ? data_->modulus.size() - 1 : 1; }

inline std::optional<std::uint64_t> Field::cardinality() const {
  switch (kind()) {
    case FieldKind::Rationals: return std::nullopt;
    case FieldKind::PrimeField: return data_->prime;
    case FieldKind::SimpleExtension: {
      auto b = base().cardinality();
      if (!b) return std::nullopt;
      unsigned __int128 total = 1;
      for (std::size_t i = 0; i < extension_degree(); ++i) {
        total *= *b;
        if (total > UINT64_MAX) return std::nullopt;
      }
      return static_cast<std::uint64_t>(total);
    }
  }
  return std::nullopt;
}

inline Scalar Field::zero() const {
  switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, mpq_class(0));
    case FieldKind::PrimeField: return Scalar(*this, std::uint64_t{0});
    case FieldKind::SimpleExtension: return Scalar(*this, std::vector<Scalar>{});
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar Field::one() const { return from_int(1); }

inline Scalar Field::from_rational(const mpq_class& value) const {
  switch (kind()) {
    case FieldKind::Rationals: return Scalar(*this, value);
    case FieldKind::PrimeField: {
      const std::uint64_t p = data_->prime;
      const std::uint64_t num = detail::reduce_mpz(value.get_num(), p);
      const std::uint64_t den = detail::reduce_mpz(value.get_den(), p);
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + spec());
      return Scalar(*this, detail::mul_mod(num, detail::pow_mod(den, p - 2, p), p));
    }
    case FieldKind::SimpleExtension: return Scalar(*this, std::vector<Scalar>{base().from_rational(value)});
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar Field::from_int(long long value) const { return from_rational(mpq_class(mpz_class(std::to_string(value)))); }

inline Scalar Field::generator() const {
  const Field b = base();
  return from_components({b.zero(), b.one()});
}

inline Scalar Field::from_components(std::vector<Scalar> components) const {
  const Field b = base();
  for (const auto& c : components) detail::check_same_field(b, c.field());
  detail::trim(components);
  if (components.size() >= modulus().size()) {
    components = detail::coeffs_divmod(components, modulus()).second;
  }
  return Scalar(*this, std::move(components));
}

inline Scalar Field::parse_scalar(std::string_view raw) const {
  std::string_view text = detail::strip(raw);
  if (is_extension() && !text.empty() && text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated extension element '" + std::string(text) + "'");
    std::string_view inner = detail::strip(text.substr(1, text.size() - 2));
    std::vector<Scalar> comps;
    if (!inner.empty()) {
      const Field b = base();
      for (const auto& part : detail::split_top_level(inner, ',')) comps.push_back(b.parse_scalar(part));
    }
    if (comps.size() > extension_degree())
      throw Error(ErrorCode::ParseError, "too many coordinates in '" + std::string(text) + "' for " + spec());
    return from_components(std::move(comps));
  }
  if (is_extension()) {
    const Field b = base();
    return from_components({b.parse_scalar(text)});
  }
  return from_rational(detail::parse_rational(text));
}

inline Scalar Field::element_at(std::uint64_t index) const {
  switch (kind()) {
    case FieldKind::Rationals: throw Error(ErrorCode::InvalidField, "cannot enumerate the rationals");
    case FieldKind::PrimeField: return Scalar(*this, index % data_->prime);
    case FieldKind::SimpleExtension: {
      const Field b = base();
      auto bc = b.cardinality();
      if (!bc) throw Error(ErrorCode::InvalidField, "cannot enumerate " + spec());
      std::vector<Scalar> comps;
      for (std::size_t i = 0; i < extension_degree(); ++i) {
        comps.push_back(b.element_at(index % *bc));
        index /= *bc;
      }
      return from_components(std::move(comps));
    }
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

// ---------------------------------------------------------------------------
// Scalar

inline Scalar::Scalar(Field field, Rep value) : field_(field), value_(std::move(value)) {
  switch (field_.kind()) {
    case FieldKind::Rationals: std::get<mpq_class>(value_).canonicalize(); break;
    case FieldKind::PrimeField: std::get<std::uint64_t>(value_) %= field_.data_->prime; break;
    case FieldKind::SimpleExtension: detail::trim(std::get<std::vector<Scalar>>(value_)); break;
  }
}

inline bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(value_) == 0;
    case FieldKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
    case FieldKind::SimpleExtension: return std::get<std::vector<Scalar>>(value_).empty();
  }
  return false;
}

inline bool Scalar::is_one() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(value_) == 1;
    case FieldKind::PrimeField: return std::get<std::uint64_t>(value_) == 1;
    case FieldKind::SimpleExtension: {
      const auto& c = std::get<std::vector<Scalar>>(value_);
      return c.size() == 1 && c[0].is_one();
    }
  }
  return false;
}

inline const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw Error(ErrorCode::SpecMismatch, "not a rational scalar");
  return std::get<mpq_class>(value_);
}

inline std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw Error(ErrorCode::SpecMismatch, "not a prime-field scalar");
  return std::get<std::uint64_t>(value_);
}

inline const std::vector<Scalar>& Scalar::components() const {
  if (!field_.is_extension()) throw Error(ErrorCode::SpecMismatch, "not an extension scalar");
  return std::get<std::vector<Scalar>>(value_);
}

inline Scalar Scalar::component(std::size_t i) const {
  const auto& c = components();
  return i < c.size() ? c[i] : field_.base().zero();
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a.field_, b.field_);
  switch (a.field_.kind()) {
    case FieldKind::Rationals: return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case FieldKind::PrimeField: {
      const std::uint64_t p = a.field_.characteristic();
      std::uint64_t s = std::get<std::uint64_t>(a.value_) + std::get<std::uint64_t>(b.value_);
      return Scalar(a.field_, s >= p ? s - p : s);
    }
    case FieldKind::SimpleExtension:
      return Scalar(a.field_, detail::coeffs_add(std::get<std::vector<Scalar>>(a.value_), std::get<std::vector<Scalar>>(b.value_)));
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar Scalar::operator-() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::PrimeField: {
      const std::uint64_t v = std::get<std::uint64_t>(value_);
      return Scalar(field_, v == 0 ? 0 : field_.data_->prime - v);
    }
    case FieldKind::SimpleExtension: return Scalar(field_, detail::coeffs_neg(std::get<std::vector<Scalar>>(value_)));
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a.field_, b.field_);
  switch (a.field_.kind()) {
    case FieldKind::Rationals: return Scalar(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case FieldKind::PrimeField:
      return Scalar(a.field_, detail::mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), a.field_.characteristic()));
    case FieldKind::SimpleExtension: {
      auto product = detail::coeffs_mul(std::get<std::vector<Scalar>>(a.value_), std::get<std::vector<Scalar>>(b.value_));
      return Scalar(a.field_, detail::coeffs_divmod(product, a.field_.modulus()).second);
    }
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.spec());
  switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    case FieldKind::PrimeField: {
      const std::uint64_t p = field_.data_->prime;
      return Scalar(field_, detail::pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }
    case FieldKind::SimpleExtension: {
      auto [g, s] = detail::coeffs_half_ext_gcd(std::get<std::vector<Scalar>>(value_), field_.data_->modulus);
      if (g.size() != 1)
        throw Error(ErrorCode::NotInvertible, to_string() + " shares a factor with the modulus of " + field_.spec() + " (modulus is reducible)");
      auto inv = detail::coeffs_scale(s, g[0].inverse());
      return Scalar(field_, detail::coeffs_divmod(inv, field_.data_->modulus).second);
    }
  }
  throw Error(ErrorCode::InvalidField, "unknown field kind");
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a.field_, b.field_);
  return a * b.inverse();
}

inline Scalar Scalar::pow(long long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1 : static_cast<unsigned long long>(exponent);
  Scalar result = field_.one();
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  switch (a.field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    case FieldKind::PrimeField: return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
    case FieldKind::SimpleExtension: return std::get<std::vector<Scalar>>(a.value_) == std::get<std::vector<Scalar>>(b.value_);
  }
  return false;
}

inline std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return std::get<mpq_class>(value_).get_str();
    case FieldKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::SimpleExtension: {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < field_.extension_degree(); ++i) parts.push_back(component(i).to_string());
      return "[" + detail::join(parts, ",") + "]";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Root search used to certify irreducibility of small-degree moduli;
/// nullopt when the base field is too large to decide.
inline std::optional<bool> has_root(const Field& base, const Coeffs& poly) {
  constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;
  if (base.is_rationals()) {
    mpz_class lcm = 1;
    for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : poly) ints.push_back(mpz_class(c.rational() * lcm));
    if (ints.front() == 0) return true;
    const mpz_class bound("1000000000000");
    mpz_class c0 = abs(ints.front()), cd = abs(ints.back());
    if (c0 > bound || cd > bound) return std::nullopt;
    for (const auto& u : positive_divisors(c0)) {
      for (const auto& v : positive_divisors(cd)) {
        for (int sign : {1, -1}) {
          mpq_class candidate(u * sign, v);
          if (eval_coeffs(poly, base.from_rational(candidate)).is_zero()) return true;
        }
      }
    }
    return false;
  }
  auto card = base.cardinality();
  if (!card || *card > kEnumerationLimit) return std::nullopt;
  for (std::uint64_t i = 0; i < *card; ++i) {
    if (eval_coeffs(poly, base.element_at(i)).is_zero()) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace maxsub
