#pragma once

// Finite-dimensional algebras given by structure constants, the
// maximal-subfield criterion deg(x) == deg(D), and randomized searches for
// additive and multiplicative commutators that generate maximal subfields.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxsub/matrix.hpp"
#include "maxsub/random.hpp"
#include "maxsub/witness.hpp"

namespace maxsub {

enum class DivisionStatus { KnownDivision, Unverified };

/// e_i * e_j = sum_k constant(i, j, k) e_k on a basis of size dim = n^2.
/// Construction verifies the unit on every basis element and associativity
/// on every basis triple.
class StructureAlgebra {
 public:
  StructureAlgebra(Field field, std::vector<std::string> labels, std::vector<Scalar> constants, std::vector<Scalar> unit,
                   DivisionStatus status, std::string status_reason)
      : field_(field),
        dim_(labels.size()),
        labels_(std::move(labels)),
        constants_(std::move(constants)),
        unit_(std::move(unit)),
        status_(status),
        status_reason_(std::move(status_reason)) {
    degree_ = 0;
    while ((degree_ + 1) * (degree_ + 1) <= dim_) ++degree_;
    if (dim_ == 0 || degree_ * degree_ != dim_)
      throw Error(ErrorCode::BadParams, "algebra dimension " + std::to_string(dim_) + " is not a perfect square");
    if (constants_.size() != dim_ * dim_ * dim_) throw Error(ErrorCode::BadParams, "structure constants must have dim^3 entries");
    if (unit_.size() != dim_) throw Error(ErrorCode::BadParams, "unit coordinates must have dim entries");
    for (const auto& c : constants_) detail::check_same_field(field_, c.field());
    for (const auto& c : unit_) detail::check_same_field(field_, c.field());
    verify_axioms();
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  /// sqrt(dim)
  std::size_t degree() const { return degree_; }
  const std::vector<std::string>& labels() const { return labels_; }
  DivisionStatus status() const { return status_; }
  const std::string& status_reason() const { return status_reason_; }
  const std::vector<Scalar>& unit() const { return unit_; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const Scalar xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const Scalar& c = constant(i, j, k);
          if (!c.is_zero()) out[k] += xy * c;
        }
      }
    }
    return out;
  }

  /// Matrix of v -> x * v in the basis; column j holds x * e_j.
  Matrix left_multiplication(const std::vector<Scalar>& x) const {
    Matrix L(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const Scalar& c = constant(i, j, k);
          if (!c.is_zero()) L(k, j) += x[i] * c;
        }
    }
    return L;
  }

  /// Index of the basis vector equal to the unit, if any.
  std::optional<std::size_t> unit_basis_index() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      bool match = true;
      for (std::size_t k = 0; k < dim_ && match; ++k) match = unit_[k] == (k == i ? field_.one() : field_.zero());
      if (match) return i;
    }
    return std::nullopt;
  }

 private:
  std::vector<Scalar> basis_vector(std::size_t i) const {
    std::vector<Scalar> e(dim_, field_.zero());
    e[i] = field_.one();
    return e;
  }

  void verify_axioms() const {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t i = 0; i < dim_; ++i) basis.push_back(basis_vector(i));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (multiply(unit_, basis[i]) != basis[i] || multiply(basis[i], unit_) != basis[i])
        throw Error(ErrorCode::BadParams, "unit does not act as identity on basis element " + labels_[i]);
    }
    std::vector<std::vector<Scalar>> products(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) products[i * dim_ + j] = multiply(basis[i], basis[j]);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          if (multiply(products[i * dim_ + j], basis[k]) != multiply(basis[i], products[j * dim_ + k]))
            throw Error(ErrorCode::BadParams, "structure constants are not associative on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
        }
  }

  Field field_;
  std::size_t dim_;
  std::size_t degree_;
  std::vector<std::string> labels_;
  std::vector<Scalar> constants_;
  std::vector<Scalar> unit_;
  DivisionStatus status_;
  std::string status_reason_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::vector<Scalar> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->dim()) throw Error(ErrorCode::ShapeMismatch, "element needs " + std::to_string(algebra_->dim()) + " coordinates");
    for (const auto& c : coords_) detail::check_same_field(algebra_->field(), c.field());
  }

  static AlgebraElement one(AlgebraPtr algebra) {
    auto u = algebra->unit();
    return AlgebraElement(std::move(algebra), std::move(u));
  }

  static AlgebraElement basis(AlgebraPtr algebra, std::size_t i) {
    std::vector<Scalar> c(algebra->dim(), algebra->field().zero());
    c.at(i) = algebra->field().one();
    return AlgebraElement(std::move(algebra), std::move(c));
  }

  static AlgebraElement scalar(AlgebraPtr algebra, const Scalar& s) { return s * one(std::move(algebra)); }

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    std::vector<Scalar> c = x.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coords_[i];
    return AlgebraElement(x.algebra_, std::move(c));
  }

  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    std::vector<Scalar> c = x.coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coords_[i];
    return AlgebraElement(x.algebra_, std::move(c));
  }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    return AlgebraElement(x.algebra_, x.algebra_->multiply(x.coords_, y.coords_));
  }

  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& x) {
    std::vector<Scalar> c = x.coords_;
    for (auto& v : c) v = s * v;
    return AlgebraElement(x.algebra_, std::move(c));
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.algebra_ == y.algebra_ && x.coords_ == y.coords_; }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }

  /// Solves L_x v = 1. A singular L_x for nonzero x is a constructive proof
  /// that the algebra has zero divisors, reported as ZeroDivisorDetected.
  AlgebraElement inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero element");
    const Matrix L = algebra_->left_multiplication(coords_);
    try {
      return AlgebraElement(algebra_, solve(L, algebra_->unit()));
    } catch (const SingularError&) {
      AlgebraElement w(algebra_, kernel_vector(L));
      throw Error(ErrorCode::ZeroDivisorDetected, to_string() + " * " + w.to_string() + " = 0");
    }
  }

  /// sum c_i * label_i, e.g. "1 + -1*i + 2*k"; "0" for zero.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string& label = algebra_->labels()[i];
      if (label == "1")
        out += coords_[i].to_string();
      else if (coords_[i].is_one())
        out += label;
      else
        out += coords_[i].to_string() + "*" + label;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_same(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra_ != y.algebra_) throw Error(ErrorCode::SpecMismatch, "elements of different algebras");
  }

  AlgebraPtr algebra_;
  std::vector<Scalar> coords_;
};

// ---------------------------------------------------------------------------
// Constructions

/// (a, b)_F with basis 1, i, j, k: i^2 = a, j^2 = b, ij = k = -ji, k^2 = -ab.
/// Known to be division over Q when a < 0 and b < 0 (positive definite norm).
inline AlgebraPtr quaternion_algebra(const Scalar& a, const Scalar& b) {
  detail::check_same_field(a.field(), b.field());
  const Field f = a.field();
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::BadParams, "quaternion parameters must be nonzero");
  if (f.characteristic() == 2) throw Error(ErrorCode::BadParams, "quaternion algebras in characteristic 2 are not supported");
  std::vector<Scalar> c(64, f.zero());
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { c[(i * 4 + j) * 4 + k] = v; };
  const Scalar one = f.one();
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, one);
    set(x, 0, x, one);
  }
  set(1, 1, 0, a);
  set(1, 2, 3, one);
  set(1, 3, 2, a);
  set(2, 1, 3, -one);
  set(2, 2, 0, b);
  set(2, 3, 1, -b);
  set(3, 1, 2, -a);
  set(3, 2, 1, b);
  set(3, 3, 0, -(a * b));
  std::vector<Scalar> unit{one, f.zero(), f.zero(), f.zero()};
  DivisionStatus status = DivisionStatus::Unverified;
  std::string reason = "division-ness not certified";
  if (f.is_rationals() && a.rational() < 0 && b.rational() < 0) {
    status = DivisionStatus::KnownDivision;
    reason = "norm form is positive definite over Q";
  }
  return std::make_shared<const StructureAlgebra>(f, std::vector<std::string>{"1", "i", "j", "k"}, std::move(c), std::move(unit), status, reason);
}

/// M_n(F) on the basis E_ij (index i*n + j); split, so never division for n > 1.
inline AlgebraPtr matrix_algebra(const Field& f, std::size_t n) {
  const std::size_t dim = n * n;
  std::vector<Scalar> c(dim * dim * dim, f.zero());
  std::vector<std::string> labels;
  std::vector<Scalar> unit(dim, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t l = 0; l < n; ++l) c[((i * n + j) * dim + (j * n + l)) * dim + (i * n + l)] = f.one();
    }
  }
  return std::make_shared<const StructureAlgebra>(f, std::move(labels), std::move(c), std::move(unit), DivisionStatus::Unverified,
                                                  "matrix algebra (split)");
}

/// Cyclic algebra (K/F, sigma, gamma) with K = F[t]/(modulus), sigma(t) the
/// given polynomial, basis t^i z^j (index j*n + i), z^n = gamma and
/// z u = sigma(u) z. Verifies that sigma is an F-automorphism of order n.
inline AlgebraPtr cyclic_algebra(const Polynomial& modulus, const Polynomial& sigma, const Scalar& gamma, bool assert_division = false) {
  const Field f = modulus.field();
  detail::check_same_field(f, sigma.field());
  detail::check_same_field(f, gamma.field());
  if (modulus.degree() < 2) throw Error(ErrorCode::BadParams, "cyclic algebra needs an extension of degree >= 2");
  if (gamma.is_zero()) throw Error(ErrorCode::BadParams, "gamma must be nonzero");
  const std::size_t n = static_cast<std::size_t>(modulus.degree());
  const Field K = Field::extension(f, modulus.coeffs());
  const Scalar t = K.generator();
  auto embed = [&](const Scalar& s) { return K.from_components({s}); };
  // sigma acting on an element of K given by its coordinates
  const Scalar s = K.from_components(sigma.coeffs());
  auto apply_sigma = [&](const Scalar& u) {
    Scalar acc = K.zero();
    for (std::size_t r = K.extension_degree(); r-- > 0;) acc = acc * s + embed(u.component(r));
    return acc;
  };
  Scalar f_of_s = K.zero();
  for (std::size_t r = modulus.coeffs().size(); r-- > 0;) f_of_s = f_of_s * s + embed(modulus.coeffs()[r]);
  if (!f_of_s.is_zero()) throw Error(ErrorCode::NotAutomorphism, "sigma(t) is not a root of the modulus");
  std::vector<Scalar> sigma_powers{t};  // sigma^j(t)
  for (std::size_t j = 1; j <= n; ++j) {
    Scalar next = apply_sigma(sigma_powers.back());
    if (j < n && next == t) throw Error(ErrorCode::BadOrder, "sigma has order " + std::to_string(j) + ", expected " + std::to_string(n));
    if (j == n && next != t) throw Error(ErrorCode::BadOrder, "sigma^" + std::to_string(n) + " is not the identity");
    if (j < n) sigma_powers.push_back(next);
  }
  const Scalar gamma_k = embed(gamma);
  const std::size_t dim = n * n;
  std::vector<Scalar> c(dim * dim * dim, f.zero());
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string label;
      if (i > 0) label = i == 1 ? "t" : "t^" + std::to_string(i);
      if (j > 0) label += std::string(label.empty() ? "" : " ") + (j == 1 ? "z" : "z^" + std::to_string(j));
      labels.push_back(label.empty() ? "1" : label);
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          // (t^i z^j)(t^k z^l) = t^i sigma^j(t)^k z^(j+l)
          Scalar u = t.pow(static_cast<long long>(i)) * sigma_powers[j].pow(static_cast<long long>(k));
          std::size_t zexp = j + l;
          if (zexp >= n) {
            u *= gamma_k;
            zexp -= n;
          }
          const std::size_t left = j * n + i, right = l * n + k;
          for (std::size_t r = 0; r < n; ++r) c[(left * dim + right) * dim + (zexp * n + r)] = u.component(r);
        }
  std::vector<Scalar> unit(dim, f.zero());
  unit[0] = f.one();
  return std::make_shared<const StructureAlgebra>(f, std::move(labels), std::move(c), std::move(unit),
                                                  assert_division ? DivisionStatus::KnownDivision : DivisionStatus::Unverified,
                                                  assert_division ? "asserted by user" : "division-ness not certified");
}

// ---------------------------------------------------------------------------
// Degrees and maximal subfields

/// Minimal polynomial of x over the base field, from the first dependence
/// among the coordinates of 1, x, x^2, ...
inline Polynomial element_min_poly(const AlgebraElement& x) {
  const auto& alg = *x.algebra();
  std::vector<Scalar> current = alg.unit();
  bool first = true;
  return krylov_dependence(alg.field(), alg.dim() + 1, [&] {
    if (!first) current = alg.multiply(x.coords(), current);
    first = false;
    return current;
  });
}

inline std::size_t element_degree(const AlgebraElement& x) { return static_cast<std::size_t>(element_min_poly(x).degree()); }

/// p(x) by Horner's rule in the algebra.
inline AlgebraElement evaluate(const Polynomial& p, const AlgebraElement& x) {
  AlgebraElement acc = AlgebraElement::scalar(x.algebra(), x.algebra()->field().zero());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + AlgebraElement::scalar(x.algebra(), p.coeffs()[i]);
  return acc;
}

struct MaximalityVerdict {
  bool maximal = false;
  std::size_t degree = 0;
  std::size_t declared_degree = 0;
  std::optional<std::string> warning;
};

/// F(x) is a maximal subfield exactly when deg x equals the degree of the
/// division algebra.
inline MaximalityVerdict is_maximal_subfield_generator(const AlgebraElement& x) {
  const auto& alg = *x.algebra();
  MaximalityVerdict v;
  v.degree = element_degree(x);
  v.declared_degree = alg.degree();
  v.maximal = v.degree == v.declared_degree;
  if (alg.status() == DivisionStatus::Unverified) v.warning = "UnverifiedAlgebra: " + alg.status_reason();
  return v;
}

// ---------------------------------------------------------------------------
// Commutator search

struct CommutatorSample {
  AlgebraElement x;
  AlgebraElement y;
  std::optional<AlgebraElement> c;
  std::optional<Polynomial> minpoly;
  std::size_t degree = 0;
  /// x or y was not invertible (multiplicative kind only).
  bool skipped = false;
};

/// c = xy - yx or x y x^-1 y^-1 together with its degree. Throws
/// DegreeBoundViolated if deg c exceeds sqrt(dim).
inline CommutatorSample commutator_probe(const AlgebraElement& x, const AlgebraElement& y, CommutatorKind kind) {
  CommutatorSample s{x, y, std::nullopt, std::nullopt, 0, false};
  if (kind == CommutatorKind::Additive) {
    s.c = x * y - y * x;
  } else {
    try {
      s.c = x * y * x.inverse() * y.inverse();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivisionByZero && e.code() != ErrorCode::ZeroDivisorDetected) throw;
      s.skipped = true;
      return s;
    }
  }
  s.minpoly = element_min_poly(*s.c);
  s.degree = static_cast<std::size_t>(s.minpoly->degree());
  if (s.degree > x.algebra()->degree())
    throw Error(ErrorCode::DegreeBoundViolated, "commutator of degree " + std::to_string(s.degree) + " exceeds the algebra degree " +
                                                    std::to_string(x.algebra()->degree()) + "; the algebra is not central simple of that degree");
  return s;
}

struct SearchReport {
  CommutatorKind kind = CommutatorKind::Additive;
  std::size_t trials = 0;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
  std::size_t degree_found = 0;
  std::size_t declared_degree = 0;
  bool success = false;
  std::size_t skipped = 0;
  std::size_t best_trial = 0;
  std::optional<CommutatorSample> best;
};

/// Deterministic probe pairs (e_i, e_j), i < j, over the non-unit basis
/// elements.
inline std::vector<std::pair<std::size_t, std::size_t>> probe_pairs(const StructureAlgebra& alg) {
  const auto unit_index = alg.unit_basis_index();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j)
      if (i != unit_index && j != unit_index) pairs.emplace_back(i, j);
  return pairs;
}

/// Trials 0 .. P-1 are the basis probes; later trial t draws x and y from
/// Rng(seed ^ t). Stops as soon as a commutator of full degree appears and
/// keeps the lowest-index sample of maximal degree.
inline SearchReport search_commutator(const AlgebraPtr& alg, CommutatorKind kind, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::BadParams, "search needs trials >= 1");
  SearchReport report;
  report.kind = kind;
  report.trials = trials;
  report.seed = seed;
  report.declared_degree = alg->degree();
  const auto probes = probe_pairs(*alg);
  for (std::size_t t = 0; t < trials; ++t) {
    std::optional<AlgebraElement> x, y;
    if (t < probes.size()) {
      x = AlgebraElement::basis(alg, probes[t].first);
      y = AlgebraElement::basis(alg, probes[t].second);
    } else {
      Rng rng = trial_rng(seed, t);
      std::vector<Scalar> xc, yc;
      for (std::size_t k = 0; k < alg->dim(); ++k) xc.push_back(random_scalar(alg->field(), rng));
      for (std::size_t k = 0; k < alg->dim(); ++k) yc.push_back(random_scalar(alg->field(), rng));
      x = AlgebraElement(alg, std::move(xc));
      y = AlgebraElement(alg, std::move(yc));
    }
    report.trials_used = t + 1;
    CommutatorSample sample = commutator_probe(*x, *y, kind);
    if (sample.skipped) {
      ++report.skipped;
      continue;
    }
    if (!report.best || sample.degree > report.degree_found) {
      report.degree_found = sample.degree;
      report.best_trial = t;
      report.best = std::move(sample);
    }
    if (report.degree_found == report.declared_degree) break;
  }
  report.success = report.degree_found == report.declared_degree;
  return report;
}

/// Re-derives a search certificate from x and y alone: recomputes c, checks
/// its minimal polynomial through the regular representation as well as the
/// coordinate Krylov sequence, and confirms p(c) = 0 in the algebra.
inline bool verify_certificate(const SearchReport& report) {
  if (!report.best || !report.best->c) return false;
  const auto& s = *report.best;
  const AlgebraElement c = report.kind == CommutatorKind::Additive ? s.x * s.y - s.y * s.x : s.x * s.y * s.x.inverse() * s.y.inverse();
  if (c != *s.c) return false;
  const Polynomial p = element_min_poly(c);
  if (p != *s.minpoly) return false;
  if (min_poly(c.algebra()->left_multiplication(c.coords())) != p) return false;
  if (!evaluate(p, c).is_zero()) return false;
  return static_cast<std::size_t>(p.degree()) == report.degree_found;
}

}  // namespace maxsub
