#include "ncsing/local_models.hpp"

#include <string>

#include "ncsing/error.hpp"

namespace ncsing {

void checkEdgeAut(const EdgeAut& a) {
  if (a.eps != 1 && a.eps != -1)
    throw Error(ErrorCode::InvalidArgument, "eps must be +1 or -1, got " + std::to_string(a.eps));
}

EdgeAut compose(const EdgeAut& outer, const EdgeAut& inner) {
  EdgeAut r;
  r.eps = outer.eps * inner.eps;
  r.n = outer.eps * inner.n + outer.n;
  r.lamX = inner.lamX * outer.lamX.pow(inner.eps);
  r.lamU = inner.lamU * outer.lamX.pow(inner.n) * outer.lamU;
  r.shift = outer.shift + inner.shift;
  return r;
}

EdgeAut inverse(const EdgeAut& a) {
  EdgeAut r;
  r.eps = a.eps;
  r.n = -a.eps * a.n;
  r.lamX = a.lamX.pow(-a.eps);
  r.lamU = (a.lamU * a.lamX.pow(r.n)).inverse();
  r.shift = a.shift;
  return r;
}

TwoPerE act(const EdgeAut& a, const TwoPerE& t) {
  return {t.coeff * a.lamX.pow(t.xExp) * a.lamU, a.eps * t.xExp + a.n};
}

bool stabilizes(const EdgeAut& a, const TwoPerE& t) { return act(a, t) == t; }

EdgeUnit torsorDifference(const TwoPerE& from, const TwoPerE& to) {
  return {to.coeff / from.coeff, to.xExp - from.xExp};
}

TwoPerE applyUnit(const EdgeUnit& unit, const TwoPerE& t) {
  return {unit.coeff * t.coeff, unit.xExp + t.xExp};
}

bool Permutation3::valid() const {
  std::array<bool, 3> hit{};
  for (int v : image) {
    if (v < 0 || v > 2 || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation3 Permutation3::inverse() const {
  Permutation3 r;
  for (int i = 0; i < 3; ++i) r.image[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
  return r;
}

Permutation3 operator*(const Permutation3& s, const Permutation3& t) {
  Permutation3 r;
  for (std::size_t i = 0; i < 3; ++i) r.image[i] = s.image[static_cast<std::size_t>(t.image[i])];
  return r;
}

namespace {

std::array<NonzeroRational, 3> permuted(const Permutation3& s, const std::array<NonzeroRational, 3>& mu) {
  const Permutation3 inv = s.inverse();
  return {mu[static_cast<std::size_t>(inv.image[0])], mu[static_cast<std::size_t>(inv.image[1])],
          mu[static_cast<std::size_t>(inv.image[2])]};
}

void checkPerm(const Permutation3& p) {
  if (!p.valid()) throw Error(ErrorCode::InvalidArgument, "not a permutation of {0,1,2}");
}

}  // namespace

VertexAut compose(const VertexAut& outer, const VertexAut& inner) {
  checkPerm(outer.perm);
  checkPerm(inner.perm);
  const auto moved = permuted(outer.perm, inner.lams);
  VertexAut r;
  for (std::size_t i = 0; i < 3; ++i) r.lams[i] = outer.lams[i] * moved[i];
  r.perm = outer.perm * inner.perm;
  r.shift = outer.shift + inner.shift;
  return r;
}

VertexAut inverse(const VertexAut& a) {
  checkPerm(a.perm);
  VertexAut r;
  r.perm = a.perm.inverse();
  // (lam, s)^{-1} = (s^{-1}(lam^{-1}), s^{-1})
  const std::array<NonzeroRational, 3> inv{a.lams[0].inverse(), a.lams[1].inverse(), a.lams[2].inverse()};
  r.lams = permuted(r.perm, inv);
  r.shift = a.shift;
  return r;
}

TwoPerV act(const VertexAut& a, const TwoPerV& t) {
  return {(a.lams[0] * a.lams[1] * a.lams[2]).inverse() * t.t};
}

bool stabilizes(const VertexAut& a, const TwoPerV& t) { return act(a, t) == t; }

NonzeroRational torsorDifference(const TwoPerV& from, const TwoPerV& to) { return to.t / from.t; }

void checkPants(const PantsPresentation& p) {
  const auto first = p.c[0] * p.c[1] * p.c[2];
  const auto second = p.c[3] * p.c[4] * p.c[5];
  if (first != NonzeroRational(1) || second != NonzeroRational(1))
    throw Error(ErrorCode::TriangleConstraintViolated,
                "triangle products are " + first.str() + " and " + second.str() + ", expected 1");
}

std::array<NonzeroRational, 3> pantsRescaleToPuncture(const PantsPresentation& p) {
  checkPants(p);
  return {p.c[0] * p.c[3], p.c[1] * p.c[4], p.c[2] * p.c[5]};
}

PantsPresentation rescaleObjects(const PantsPresentation& p, const std::array<NonzeroRational, 3>& d) {
  static constexpr std::array<std::pair<int, int>, 6> kEnds{{{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}}};
  PantsPresentation out = p;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [s, t] = kEnds[k];
    out.c[k] = d[static_cast<std::size_t>(t)] * p.c[k] / d[static_cast<std::size_t>(s)];
  }
  return out;
}

PantsPresentation pantsFromPunctures(const std::array<NonzeroRational, 3>& punctures) {
  PantsPresentation p{{punctures[0], punctures[1], punctures[2], 1, 1, 1}};
  checkPants(p);
  return p;
}

}  // namespace ncsing
