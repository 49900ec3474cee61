#pragma once

// Seeded sampling shared by every randomized routine. Trial k of a run with
// seed s always draws from Rng(s ^ k), so results do not depend on how trials
// are scheduled.

#include <cstdint>
#include <random>
#include <vector>

#include "maxsub/field.hpp"

namespace maxsub {

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(seed ^ trial); }

/// Uniform in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

inline long long uniform_in(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Rationals are drawn from {-height, ..., height}; finite fields uniformly;
/// extensions coordinate-wise.
inline Scalar random_scalar(const Field& field, Rng& rng, long long height = 3) {
  switch (field.kind()) {
    case FieldKind::Rationals: return field.from_int(uniform_in(rng, -height, height));
    case FieldKind::PrimeField: return field.element_at(uniform_below(rng, field.characteristic()));
    case FieldKind::SimpleExtension: {
      const Field base = field.base();
      std::vector<Scalar> comps;
      for (std::size_t i = 0; i < field.extension_degree(); ++i) comps.push_back(random_scalar(base, rng, height));
      return field.from_components(std::move(comps));
    }
  }
  return field.zero();
}

inline Scalar random_nonzero_scalar(const Field& field, Rng& rng, long long height = 3) {
  for (;;) {
    Scalar s = random_scalar(field, rng, height);
    if (!s.is_zero()) return s;
  }
}

}  // namespace maxsub
