#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxsub/field.hpp"

namespace maxsub {

/// Univariate polynomial over a Field; coefficients lowest degree first with
/// no trailing zeros, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) detail::check_same_field(field_, c.field());
    detail::trim(coeffs_);
  }

  static Polynomial from_ints(Field field, std::initializer_list<long long> coeffs) {
    std::vector<Scalar> c;
    for (long long v : coeffs) c.push_back(field.from_int(v));
    return Polynomial(field, std::move(c));
  }
  static Polynomial constant(const Scalar& c) { return Polynomial(c.field(), {c}); }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial(root.field(), {-root, root.field().one()}); }
  static Polynomial monomial(Field field, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, field.zero());
    c.back() = field.one();
    return Polynomial(field, std::move(c));
  }

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  Scalar leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return Polynomial(field_, detail::coeffs_scale(coeffs_, coeffs_.back().inverse()));
  }

  Scalar operator()(const Scalar& at) const {
    detail::check_same_field(field_, at.field());
    return detail::eval_coeffs(coeffs_, at);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    detail::check_same_field(a.field_, b.field_);
    return Polynomial(a.field_, detail::coeffs_add(a.coeffs_, b.coeffs_));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    detail::check_same_field(a.field_, b.field_);
    return Polynomial(a.field_, detail::coeffs_sub(a.coeffs_, b.coeffs_));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    detail::check_same_field(a.field_, b.field_);
    return Polynomial(a.field_, detail::coeffs_mul(a.coeffs_, b.coeffs_));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    detail::check_same_field(s.field(), p.field_);
    return Polynomial(p.field_, detail::coeffs_scale(p.coeffs_, s));
  }
  Polynomial operator-() const { return Polynomial(field_, detail::coeffs_neg(coeffs_)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Space-separated coefficients, lowest degree first; "0" for zero.
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::string> parts;
    for (const auto& c : coeffs_) parts.push_back(c.to_string());
    return detail::join(parts, " ");
  }

  static Polynomial parse(Field field, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Scalar> coeffs;
    std::string token;
    while (in >> token) coeffs.push_back(field.parse_scalar(token));
    return Polynomial(field, std::move(coeffs));
  }

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// (quotient, remainder) with deg remainder < deg divisor.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  detail::check_same_field(a.field(), b.field());
  auto [q, r] = detail::coeffs_divmod(a.coeffs(), b.coeffs());
  return {Polynomial(a.field(), std::move(q)), Polynomial(a.field(), std::move(r))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  detail::check_same_field(a.field(), b.field());
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool divides(const Polynomial& d, const Polynomial& f) { return divmod(f, d).second.is_zero(); }

/// Inverse of an element of a simple extension by extended gcd against the
/// modulus. NotInvertible signals a reducible modulus.
inline Scalar ext_inverse(const Scalar& a) {
  if (!a.field().is_extension()) throw Error(ErrorCode::SpecMismatch, "ext_inverse needs an extension-field element");
  return a.inverse();
}

}  // namespace maxsub
