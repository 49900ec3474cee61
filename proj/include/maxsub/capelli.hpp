#pragma once

// The alternating polynomial
//
//   g_n(x, y_1, ..., y_n) = sum over d in S_{n+1} of
//                           sign(d) x^d(0) y_1 x^d(1) y_2 ... y_n x^d(n)
//
// and the degree test built on it: g_n vanishes under every substitution of
// the y's exactly when x has algebraic degree <= n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxsub/matrix.hpp"
#include "maxsub/random.hpp"

namespace maxsub {

/// Structural descriptor of g_n: n y-slots, (n+1)! signed terms.
struct GnIdentity {
  std::size_t n;

  std::size_t slot_count() const { return n; }

  std::uint64_t term_count() const {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n + 1; ++k) f *= k;
    return f;
  }

  /// +1 or -1 by the parity of the inversion count.
  static int sign(std::span<const std::size_t> perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
  }
};

namespace detail {

inline void check_gn_args(std::size_t n, const Matrix& x, std::span<const Matrix> ys) {
  require_square(x, "g_n");
  if (n == 0) throw Error(ErrorCode::BadParams, "g_n needs n >= 1");
  if (ys.size() != n)
    throw Error(ErrorCode::ShapeMismatch, "g_" + std::to_string(n) + " takes " + std::to_string(n) + " y-arguments, got " + std::to_string(ys.size()));
  for (const auto& y : ys) {
    detail::check_same_field(x.field(), y.field());
    if (y.rows() != x.rows() || y.cols() != x.cols())
      throw Error(ErrorCode::ShapeMismatch, "y-argument " + y.shape_string() + " does not match x " + x.shape_string());
  }
}

inline std::vector<Matrix> powers_up_to(const Matrix& x, std::size_t n) {
  std::vector<Matrix> powers{Matrix::identity(x.field(), x.rows())};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * x);
  return powers;
}

}  // namespace detail

/// Reference evaluation: one product per permutation of {0, ..., n}.
inline Matrix gn_eval_naive(std::size_t n, const Matrix& x, std::span<const Matrix> ys) {
  detail::check_gn_args(n, x, ys);
  const auto powers = detail::powers_up_to(x, n);
  std::vector<std::size_t> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix sum(x.field(), x.rows(), x.cols());
  do {
    Matrix term = powers[perm[0]];
    for (std::size_t k = 1; k <= n; ++k) term = term * ys[k - 1] * powers[perm[k]];
    if (GnIdentity::sign(perm) > 0)
      sum = sum + term;
    else
      sum = sum - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Same value as gn_eval_naive via dynamic programming over subsets: the
/// entry for exponent set S (|S| = k + 1) holds the signed sum of every prefix
/// x^e0 y_1 x^e1 ... y_k x^ek with {e0, ..., ek} = S. Appending exponent e
/// after S adds #{s in S : s > e} inversions.
inline Matrix gn_eval_fast(std::size_t n, const Matrix& x, std::span<const Matrix> ys) {
  detail::check_gn_args(n, x, ys);
  const auto powers = detail::powers_up_to(x, n);
  const std::size_t slots = n + 1;
  const std::size_t full = (std::size_t{1} << slots) - 1;
  std::vector<std::optional<Matrix>> partial(full + 1);
  for (std::size_t e = 0; e < slots; ++e) partial[std::size_t{1} << e] = powers[e];
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!partial[mask]) continue;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    const Matrix with_y = *partial[mask] * ys[k - 1];
    for (std::size_t e = 0; e < slots; ++e) {
      if (mask & (std::size_t{1} << e)) continue;
      const std::size_t larger = static_cast<std::size_t>(__builtin_popcountll(mask >> (e + 1)));
      Matrix step = e == 0 ? with_y : with_y * powers[e];
      if (larger % 2) step = -step;
      auto& target = partial[mask | (std::size_t{1} << e)];
      if (target)
        *target = *target + step;
      else
        target = std::move(step);
    }
  }
  return *partial[full];
}

inline std::vector<Matrix> random_matrices(const Field& field, std::size_t size, std::size_t count, Rng& rng) {
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < count; ++c) {
    Matrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = random_scalar(field, rng);
    out.push_back(std::move(m));
  }
  return out;
}

inline Matrix random_matrix(const Field& field, std::size_t size, Rng& rng) {
  return std::move(random_matrices(field, size, 1, rng).front());
}

/// Outcome of sampling g_n(x, ys) at random ys. A witness is an exact
/// disproof of vanishing; `vanished` is probabilistic evidence only.
struct VanishResult {
  bool vanished = true;
  std::size_t trials = 0;
  std::size_t witness_trial = 0;
  std::vector<Matrix> witness;
  std::optional<Matrix> value;
};

inline VanishResult gn_vanishes_on(const Matrix& x, std::size_t n, std::size_t trials, std::uint64_t seed) {
  require_square(x, "gn_vanishes_on");
  if (trials == 0) throw Error(ErrorCode::BadParams, "gn_vanishes_on needs trials >= 1");
  VanishResult result;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    auto ys = random_matrices(x.field(), x.rows(), n, rng);
    Matrix value = gn_eval_fast(n, x, ys);
    result.trials = t + 1;
    if (!value.is_zero()) {
      result.vanished = false;
      result.witness_trial = t;
      result.witness = std::move(ys);
      result.value = std::move(value);
      return result;
    }
  }
  return result;
}

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t minpoly_degree = 0;
  /// g_{degree-1} witness certifying degree > degree - 1; absent for degree 1.
  std::optional<VanishResult> lower_witness;
  bool probabilistic = true;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

/// Smallest n for which sampling finds g_n(x, ...) identically zero,
/// reported next to deg min_poly(x).
inline DegreeReport degree_via_gn(const Matrix& x, std::size_t trials, std::uint64_t seed) {
  require_square(x, "degree_via_gn");
  DegreeReport report;
  report.trials = trials;
  report.seed = seed;
  report.minpoly_degree = algebraic_degree(x);
  std::optional<VanishResult> last_witness;
  for (std::size_t n = 1; n <= x.rows(); ++n) {
    auto r = gn_vanishes_on(x, n, trials, seed);
    if (r.vanished) {
      report.degree = n;
      report.lower_witness = std::move(last_witness);
      return report;
    }
    last_witness = std::move(r);
  }
  throw Error(ErrorCode::DegreeBoundViolated, "g_m did not vanish on an m x m matrix");
}

struct Lemma22Case {
  std::string label;
  Matrix x;
  std::size_t minpoly_degree = 0;
  std::size_t gn_degree = 0;
  /// vanished[n - 1] is the sampled verdict for g_n.
  std::vector<bool> vanished;
  bool agree = false;
};

struct Lemma22Report {
  std::size_t size = 0;
  std::size_t max_n = 0;
  Field field;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<Lemma22Case> cases;

  bool all_agree() const {
    return std::all_of(cases.begin(), cases.end(), [](const Lemma22Case& c) { return c.agree; });
  }
};

/// Constructed matrices of known degree in M_m(field): scalars, the zero
/// matrix, diag(1,2,...) padded with 1s, a nilpotent unit, a Jordan block and
/// the companion matrix of x^m - x - 1.
inline std::vector<std::pair<std::string, Matrix>> lemma22_forced_cases(const Field& field, std::size_t m) {
  std::vector<std::pair<std::string, Matrix>> cases;
  cases.emplace_back("zero", Matrix(field, m, m));
  cases.emplace_back("scalar 3I", Matrix::scalar(field.from_int(3), m));
  std::vector<Scalar> d12(m, field.one());
  if (m >= 2) d12[1] = field.from_int(2);
  cases.emplace_back("diag(1,2)", Matrix::diagonal(d12));
  if (m >= 3) {
    std::vector<Scalar> distinct;
    for (std::size_t i = 0; i < m; ++i) distinct.push_back(field.from_int(static_cast<long long>(i + 1)));
    cases.emplace_back("diag(1..m)", Matrix::diagonal(distinct));
  }
  if (m >= 2) cases.emplace_back("E12", Matrix::unit(field, m, 0, 1));
  Matrix jordan = Matrix::identity(field, m);
  for (std::size_t i = 0; i + 1 < m; ++i) jordan(i, i + 1) = field.one();
  cases.emplace_back("jordan J_m(1)", jordan);
  std::vector<Scalar> f(m + 1, field.zero());
  f[0] = -field.one();
  if (m >= 2) f[1] = -field.one();
  f[m] = field.one();
  if (m == 1) f[0] = -field.from_int(2);
  cases.emplace_back("companion(x^m - x - 1)", Matrix::companion(Polynomial(field, f)));
  return cases;
}

inline std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
}

/// Checks both directions of the g_n degree criterion on forced and random
/// matrices: for each n <= max_n, "g_n vanished" must equal "degree <= n",
/// and degree_via_gn must equal the minimal-polynomial degree.
inline Lemma22Report lemma22_check(std::size_t m, std::size_t max_n, const Field& field, std::size_t random_cases,
                                   std::size_t trials, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::BadParams, "matrix size must be positive");
  Lemma22Report report;
  report.size = m;
  report.max_n = max_n;
  report.field = field;
  report.trials = trials;
  report.seed = seed;
  auto inputs = lemma22_forced_cases(field, m);
  Rng sampler(seed);
  for (std::size_t i = 0; i < random_cases; ++i) inputs.emplace_back("random #" + std::to_string(i), random_matrix(field, m, sampler));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Lemma22Case c{inputs[i].first, inputs[i].second, 0, 0, {}, false};
    const std::uint64_t s = case_seed(seed, i);
    const auto degree = degree_via_gn(c.x, trials, s);
    c.minpoly_degree = degree.minpoly_degree;
    c.gn_degree = degree.degree;
    c.agree = c.gn_degree == c.minpoly_degree;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const bool vanished = gn_vanishes_on(c.x, n, trials, s).vanished;
      c.vanished.push_back(vanished);
      if (vanished != (c.minpoly_degree <= n)) c.agree = false;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace maxsub
