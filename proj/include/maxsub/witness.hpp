#pragma once

// Explicit matrix pairs whose commutator has algebraic degree exactly n.
//
// A is companion-shaped (ones on the subdiagonal, a_1..a_{n-1} down the last
// column, zero in the corner).
//   multiplicative: B = diag(b_1..b_n); C = A B A^-1 B^-1 is lower triangular
//                   with diagonal (b_n/b_1, b_1/b_2, ..., b_{n-1}/b_n).
//   additive:       B has b_1..b_{n-1} on the superdiagonal; C = AB - BA is
//                   upper triangular with diagonal
//                   (-b_1, b_1 - b_2, ..., b_{n-2} - b_{n-1}, b_{n-1}).
// Pairwise distinct diagonal entries force min_poly(C) = char_poly(C), so
// deg C = n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/matrix.hpp"
#include "maxsub/random.hpp"

namespace maxsub {

enum class CommutatorKind { Additive, Multiplicative };

inline std::string_view kind_name(CommutatorKind kind) { return kind == CommutatorKind::Additive ? "add" : "mult"; }

struct WitnessParams {
  CommutatorKind kind = CommutatorKind::Additive;
  std::size_t n = 0;
  std::vector<Scalar> a;  // n - 1 last-column entries of A
  std::vector<Scalar> b;  // multiplicative: n diagonal entries; additive: n - 1 superdiagonal entries
  /// The n = 2 additive pair A = E12, B = E21 + E22, valid in every characteristic.
  bool fixed_pair = false;
  std::string origin;
};

struct WitnessReport {
  WitnessParams params;
  Matrix A;
  Matrix B;
  Matrix C;
  Polynomial minpoly;
  Polynomial charpoly;
  std::size_t degree = 0;
  bool lower_triangular = false;
  bool upper_triangular = false;
  std::vector<Scalar> diagonal;
  std::vector<Scalar> expected_diagonal;
  bool diagonal_matches = false;
  Scalar determinant;
  Scalar trace;
};

inline Matrix build_A(std::size_t n, const std::vector<Scalar>& a) {
  if (n < 2) throw Error(ErrorCode::BadParams, "witness size must be >= 2");
  if (a.size() != n - 1) throw Error(ErrorCode::BadParams, "A needs n - 1 = " + std::to_string(n - 1) + " entries, got " + std::to_string(a.size()));
  const Field f = a[0].field();
  Matrix A(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    A(i + 1, i) = f.one();
    A(i, n - 1) = a[i];
  }
  return A;
}

inline Matrix build_mult_B(const std::vector<Scalar>& b) { return Matrix::diagonal(b); }

inline Matrix build_add_B(std::size_t n, const std::vector<Scalar>& b) {
  if (b.size() + 1 != n) throw Error(ErrorCode::BadParams, "additive B needs n - 1 superdiagonal entries");
  Matrix B(b[0].field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) B(i, i + 1) = b[i];
  return B;
}

/// (b_n/b_1, b_1/b_2, ..., b_{n-1}/b_n)
inline std::vector<Scalar> expected_mult_diagonal(const std::vector<Scalar>& b) {
  std::vector<Scalar> d{b.back() / b.front()};
  for (std::size_t i = 0; i + 1 < b.size(); ++i) d.push_back(b[i] / b[i + 1]);
  return d;
}

/// (-b_1, b_1 - b_2, ..., b_{n-2} - b_{n-1}, b_{n-1})
inline std::vector<Scalar> expected_add_diagonal(const std::vector<Scalar>& b) {
  std::vector<Scalar> d{-b.front()};
  for (std::size_t i = 0; i + 1 < b.size(); ++i) d.push_back(b[i] - b[i + 1]);
  d.push_back(b.back());
  return d;
}

inline bool pairwise_distinct(const std::vector<Scalar>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) return false;
  return true;
}

namespace detail {

inline bool all_nonzero(const std::vector<Scalar>& values) {
  for (const auto& v : values)
    if (v.is_zero()) return false;
  return true;
}

inline bool params_admissible(const WitnessParams& p) {
  if (p.fixed_pair) return true;
  if (!all_nonzero(p.a) || !all_nonzero(p.b)) return false;
  return pairwise_distinct(p.kind == CommutatorKind::Multiplicative ? expected_mult_diagonal(p.b) : expected_add_diagonal(p.b));
}

inline Scalar power_of_two(const Field& f, std::size_t exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return f.from_rational(mpq_class(v));
}

}  // namespace detail

/// Deterministic parameters first (a = 1; multiplicative b_i = 2^{i(i-1)/2};
/// additive diagonal targets 1, 2, ..., n-1, -n(n-1)/2), then up to 100
/// seeded random retries when the field collapses the deterministic choice.
inline WitnessParams choose_params(std::size_t n, CommutatorKind kind, const Field& field, std::uint64_t seed = 0) {
  if (n < 2) throw Error(ErrorCode::BadParams, "witness size must be >= 2");
  WitnessParams p;
  p.kind = kind;
  p.n = n;
  if (kind == CommutatorKind::Additive && n == 2) {
    p.fixed_pair = true;
    p.origin = "fixed n=2 pair";
    return p;
  }
  p.a.assign(n - 1, field.one());
  p.origin = "deterministic";
  if (kind == CommutatorKind::Multiplicative) {
    for (std::size_t i = 1; i <= n; ++i) p.b.push_back(detail::power_of_two(field, i * (i - 1) / 2));
  } else {
    for (std::size_t k = 1; k < n; ++k) p.b.push_back(-field.from_int(static_cast<long long>(k * (k + 1) / 2)));
  }
  if (detail::params_admissible(p)) return p;

  constexpr std::size_t kRetries = 100;
  const std::size_t b_count = kind == CommutatorKind::Multiplicative ? n : n - 1;
  for (std::size_t r = 0; r < kRetries; ++r) {
    Rng rng = trial_rng(seed, r);
    p.b.clear();
    for (std::size_t k = 0; k < b_count; ++k) p.b.push_back(random_nonzero_scalar(field, rng));
    if (detail::params_admissible(p)) {
      p.origin = "random retry " + std::to_string(r);
      return p;
    }
  }
  const auto card = field.cardinality();
  if (kind == CommutatorKind::Additive && card && *card >= n)
    throw Error(ErrorCode::CharTooSmall, "the diagonal of AB - BA collides modulo " + std::to_string(field.characteristic()) + " for n = " + std::to_string(n));
  throw Error(ErrorCode::FieldTooSmall, field.spec() + " cannot realize n = " + std::to_string(n) + " pairwise distinct " +
                                            (kind == CommutatorKind::Multiplicative ? "ratios" : "diagonal entries"));
}

/// Builds A, B and the commutator, then checks shape, diagonal and degree.
/// Throws BadParams if the parameters violate nonvanishing or distinctness.
inline WitnessReport build_witness(const WitnessParams& p, const Field& field) {
  if (p.n < 2) throw Error(ErrorCode::BadParams, "witness size must be >= 2");
  Matrix A(field, p.n, p.n), B(field, p.n, p.n);
  std::vector<Scalar> expected;
  if (p.fixed_pair) {
    if (p.kind != CommutatorKind::Additive || p.n != 2) throw Error(ErrorCode::BadParams, "the fixed pair is the n = 2 additive witness");
    A = Matrix::unit(field, 2, 0, 1);
    B = Matrix::unit(field, 2, 1, 0) + Matrix::unit(field, 2, 1, 1);
    expected = {field.one(), -field.one()};
  } else {
    const std::size_t b_count = p.kind == CommutatorKind::Multiplicative ? p.n : p.n - 1;
    if (p.b.size() != b_count) throw Error(ErrorCode::BadParams, "expected " + std::to_string(b_count) + " b-parameters");
    if (p.kind == CommutatorKind::Additive && p.n < 3) throw Error(ErrorCode::BadParams, "the companion-shaped additive witness needs n >= 3");
    for (const auto& s : p.a) maxsub::detail::check_same_field(field, s.field());
    for (const auto& s : p.b) maxsub::detail::check_same_field(field, s.field());
    if (!detail::all_nonzero(p.a) || !detail::all_nonzero(p.b)) throw Error(ErrorCode::BadParams, "all a_i and b_j must be nonzero");
    A = build_A(p.n, p.a);
    if (p.kind == CommutatorKind::Multiplicative) {
      B = build_mult_B(p.b);
      expected = expected_mult_diagonal(p.b);
    } else {
      B = build_add_B(p.n, p.b);
      expected = expected_add_diagonal(p.b);
    }
    if (!pairwise_distinct(expected)) throw Error(ErrorCode::BadParams, "the commutator's diagonal entries are not pairwise distinct");
  }
  Matrix C = p.kind == CommutatorKind::Multiplicative ? A * B * inverse(A) * inverse(B) : A * B - B * A;
  Polynomial minpoly = min_poly(C);
  WitnessReport r{p,
                  A,
                  B,
                  C,
                  minpoly,
                  char_poly(C),
                  static_cast<std::size_t>(minpoly.degree()),
                  C.is_lower_triangular(),
                  C.is_upper_triangular(),
                  C.diagonal_entries(),
                  expected,
                  false,
                  determinant(C),
                  C.trace()};
  r.diagonal_matches = r.diagonal == r.expected_diagonal;
  return r;
}

inline WitnessReport build_mult_witness(std::size_t n, const Field& field, std::uint64_t seed = 0) {
  return build_witness(choose_params(n, CommutatorKind::Multiplicative, field, seed), field);
}

inline WitnessReport build_add_witness(std::size_t n, const Field& field, std::uint64_t seed = 0) {
  return build_witness(choose_params(n, CommutatorKind::Additive, field, seed), field);
}

}  // namespace maxsub
