#pragma once

#include "tmw/errors.hpp"
#include "tmw/rational.hpp"

namespace tmw {

// The plane cubic y^2 = x^3 + ax + b. Singular coefficients are representable;
// operations that need smoothness guard on the discriminant.
struct WeierstrassCurve {
  Rational a;
  Rational b;
};

inline Rational discriminant(const WeierstrassCurve& e) {
  return 4 * e.a * e.a * e.a + 27 * e.b * e.b;
}

// j(a, b) = 4a^3 / (4a^3 + 27b^2), exact. Note this normalization omits the
// classical factor 1728.
inline Rational j_invariant(const WeierstrassCurve& e) {
  const Rational delta = discriminant(e);
  if (delta == 0) throw ValidationError("singular curve");
  return Rational(4 * e.a * e.a * e.a) / delta;
}

// Smooth curves are isomorphic exactly when their j-invariants agree.
inline bool curves_isomorphic(const WeierstrassCurve& e1, const WeierstrassCurve& e2) {
  return j_invariant(e1) == j_invariant(e2);
}

}  // namespace tmw
