#pragma once

#include <array>
#include <cstdint>

#include "ncsing/rational.hpp"

namespace ncsing {

/// Parity of the shift [k]; [2] is absorbed by the 2-periodic structure.
struct Shift {
  int bit = 0;

  friend Shift operator+(Shift a, Shift b) { return {(a.bit + b.bit) & 1}; }
  friend bool operator==(const Shift&, const Shift&) = default;
};

/// coeff * x^xExp * u^uExp in k[x^{+-1}, u^{+-1}]; u has degree 2.
struct Monomial {
  NonzeroRational coeff;
  std::int64_t xExp = 0;
  std::int64_t uExp = 0;

  std::int64_t degree() const { return 2 * uExp; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Discrete part [[eps, n], [0, 1]] of a graded automorphism.
struct DiscretePart {
  int eps = 1;
  std::int64_t n = 0;

  friend DiscretePart operator*(const DiscretePart& outer, const DiscretePart& inner) {
    return {outer.eps * inner.eps, outer.eps * inner.n + outer.n};
  }
  friend bool operator==(const DiscretePart&, const DiscretePart&) = default;
};

/// Autoequivalence of the edge model, acting by
/// (x, u) -> (lamX * x^eps, lamU * x^n * u), together with a shift parity.
struct EdgeAut {
  int eps = 1;
  std::int64_t n = 0;
  NonzeroRational lamX;
  NonzeroRational lamU;
  Shift shift;

  static EdgeAut identity() { return {}; }
  DiscretePart discrete() const { return {eps, n}; }
  friend bool operator==(const EdgeAut&, const EdgeAut&) = default;
};

/// Checks eps is +-1 (throws InvalidArgument otherwise).
void checkEdgeAut(const EdgeAut& a);

/// outer after inner, as ring maps.
EdgeAut compose(const EdgeAut& outer, const EdgeAut& inner);
EdgeAut inverse(const EdgeAut& a);

/// A 2-periodic structure on the edge model: c * x^m * u.
struct TwoPerE {
  NonzeroRational coeff;
  std::int64_t xExp = 0;

  Monomial monomial() const { return {coeff, xExp, 1}; }
  friend bool operator==(const TwoPerE&, const TwoPerE&) = default;
};

TwoPerE act(const EdgeAut& a, const TwoPerE& t);
bool stabilizes(const EdgeAut& a, const TwoPerE& t);

/// The unique unit c * x^n with to = (c * x^n) * from.
struct EdgeUnit {
  NonzeroRational coeff;
  std::int64_t xExp = 0;

  friend bool operator==(const EdgeUnit&, const EdgeUnit&) = default;
};
EdgeUnit torsorDifference(const TwoPerE& from, const TwoPerE& to);
TwoPerE applyUnit(const EdgeUnit& unit, const TwoPerE& t);

/// Permutation of {0, 1, 2}: image[i] = sigma(i).
struct Permutation3 {
  std::array<int, 3> image{0, 1, 2};

  bool valid() const;
  Permutation3 inverse() const;
  friend Permutation3 operator*(const Permutation3& s, const Permutation3& t);  // s after t
  friend bool operator==(const Permutation3&, const Permutation3&) = default;
};

/// Autoequivalence of the vertex model: ((Q^x)^3 semidirect S3) x Z/2.
struct VertexAut {
  std::array<NonzeroRational, 3> lams;
  Permutation3 perm;
  Shift shift;

  static VertexAut identity() { return {}; }
  friend bool operator==(const VertexAut&, const VertexAut&) = default;
};

/// (lam, s)(mu, t) = (lam * s(mu), s t), with s(mu)_i = mu_{s^-1(i)}.
VertexAut compose(const VertexAut& outer, const VertexAut& inner);
VertexAut inverse(const VertexAut& a);

/// A 2-periodic structure on the vertex model; a Q^x-torsor point.
struct TwoPerV {
  NonzeroRational t;

  friend bool operator==(const TwoPerV&, const TwoPerV&) = default;
};

/// t -> (lam1 lam2 lam3)^{-1} t; permutation and shift act trivially.
TwoPerV act(const VertexAut& a, const TwoPerV& t);
bool stabilizes(const VertexAut& a, const TwoPerV& t);
/// The unique c with to = c * from.
NonzeroRational torsorDifference(const TwoPerV& from, const TwoPerV& to);

/// Scalars on the six generating morphisms of the pair of pants, as two
/// oppositely oriented triangles over objects 0, 1, 2:
///   c1: 0->1, c2: 1->2, c3: 2->0   and   c4: 1->0, c5: 2->1, c6: 0->2.
/// Puncture k pairs c_{k+1} with c_{k+4}.
struct PantsPresentation {
  std::array<NonzeroRational, 6> c;
};

/// Throws TriangleConstraintViolated unless each triangle multiplies to 1.
void checkPants(const PantsPresentation& p);
/// (c1 c4, c2 c5, c3 c6).
std::array<NonzeroRational, 3> pantsRescaleToPuncture(const PantsPresentation& p);
/// Rescale object k by d[k]: a generator s->t becomes d_t * c * d_s^{-1}.
PantsPresentation rescaleObjects(const PantsPresentation& p, const std::array<NonzeroRational, 3>& d);
/// A representative with the given puncture scalars (their product must be 1).
PantsPresentation pantsFromPunctures(const std::array<NonzeroRational, 3>& punctures);

}  // namespace ncsing
