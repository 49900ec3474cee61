#pragma once

#include <cstddef>
#include <vector>

#include "maxsub/polynomial.hpp"

namespace maxsub {

/// Finds the first linear dependence among the vectors v_0, v_1, ... yielded
/// by successive calls to `next()`, by incremental row reduction. Returns the
/// monic relation c (as a polynomial) with sum_i c_i v_i = 0 and deg c equal
/// to the number of independent vectors seen. `limit` bounds the number of
/// vectors drawn; for vectors of length N, N + 1 always suffices.
template <class Next>
Polynomial krylov_dependence(const Field& field, std::size_t limit, Next&& next) {
  struct Row {
    std::vector<Scalar> vec;    // pivot entry normalized to 1
    std::vector<Scalar> combo;  // row = sum combo[i] * v_i
    std::size_t pivot;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < limit; ++k) {
    std::vector<Scalar> v = next();
    std::vector<Scalar> combo(k + 1, field.zero());
    combo[k] = field.one();
    for (const auto& row : rows) {
      const Scalar factor = v[row.pivot];
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!row.vec[j].is_zero()) v[j] -= factor * row.vec[j];
      }
      for (std::size_t j = 0; j < row.combo.size(); ++j) {
        if (!row.combo[j].is_zero()) combo[j] -= factor * row.combo[j];
      }
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return Polynomial(field, std::move(combo));
    const Scalar inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(Row{std::move(v), std::move(combo), pivot});
  }
  throw Error(ErrorCode::BadParams, "no linear dependence within the vector limit");
}

}  // namespace maxsub
