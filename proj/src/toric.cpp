#include "ncsing/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ncsing/error.hpp"

namespace ncsing {

namespace {

std::int64_t det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::string show(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

// Coordinates of x in a unimodular basis (columns b0, b1, b2), by Cramer's rule.
Vec3 coordinates(const Vec3& b0, const Vec3& b1, const Vec3& b2, const Vec3& x) {
  const std::int64_t d = det3(b0, b1, b2);
  if (d != 1 && d != -1) throw Error(ErrorCode::InvalidFan, "basis is not unimodular");
  return {det3(x, b1, b2) * d, det3(b0, x, b2) * d, det3(b0, b1, x) * d};
}

bool contains(const std::array<std::size_t, 3>& cone, std::size_t ray) {
  return std::find(cone.begin(), cone.end(), ray) != cone.end();
}

std::size_t thirdRay(const std::array<std::size_t, 3>& cone, std::size_t a, std::size_t b) {
  for (std::size_t r : cone)
    if (r != a && r != b) return r;
  throw Error(ErrorCode::InvalidFan, "degenerate cone");
}

std::map<Wall, std::vector<std::size_t>> wallIncidence(const Fan& f) {
  std::map<Wall, std::vector<std::size_t>> incidence;
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const auto& k = f.cones[c];
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        incidence[{std::min(k[i], k[j]), std::max(k[i], k[j])}].push_back(c);
  }
  return incidence;
}

// Self-intersection of the curve of wall {divisor, curve} inside the toric
// surface of `divisor`. Project the star of `divisor` to Z^3 / Z*divisor using
// the unimodular basis (curve, w1, divisor); there u_C = (1,0), u_prev = (0,1)
// and u_next = (p, q), and the relation u_prev + u_next + s*u_C = 0 gives s.
std::int64_t starSelfIntersection(const Fan& f, std::size_t divisor, std::size_t curve, std::size_t w1,
                                  std::size_t w2) {
  const Vec3 image = coordinates(f.rays[curve], f.rays[w1], f.rays[divisor], f.rays[w2]);
  if (image[1] != -1)
    throw Error(ErrorCode::InvalidFan, "star of ray " + std::to_string(divisor) + " is not smooth along ray " +
                                           std::to_string(curve));
  return -image[0];
}

// The anticanonical support function is linear on each maximal cone, taking
// the value 1 on its rays: m . r = 1.
Vec3 supportFunction(const Fan& f, const std::array<std::size_t, 3>& cone) {
  const Vec3& r0 = f.rays[cone[0]];
  const Vec3& r1 = f.rays[cone[1]];
  const Vec3& r2 = f.rays[cone[2]];
  // Solve the rows-system [r0; r1; r2] m = (1,1,1) with the transposed basis.
  const Vec3 c0{r0[0], r1[0], r2[0]};
  const Vec3 c1{r0[1], r1[1], r2[1]};
  const Vec3 c2{r0[2], r1[2], r2[2]};
  return coordinates(c0, c1, c2, {1, 1, 1});
}

// Outward-free facet normals: n_i . r_i > 0 and n_i vanishes on the other two rays.
std::array<Vec3, 3> facetNormals(const Fan& f, const std::array<std::size_t, 3>& cone) {
  std::array<Vec3, 3> normals;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec3 n = cross(f.rays[cone[(i + 1) % 3]], f.rays[cone[(i + 2) % 3]]);
    if (dot(n, f.rays[cone[i]]) < 0) n = {-n[0], -n[1], -n[2]};
    normals[i] = n;
  }
  return normals;
}

// Two unimodular cones meet properly iff every extreme ray of their
// intersection lies on their common face.
bool meetProperly(const Fan& f, const std::array<std::size_t, 3>& a, const std::array<std::size_t, 3>& b) {
  std::vector<Vec3> normals;
  for (const auto& n : facetNormals(f, a)) normals.push_back(n);
  for (const auto& n : facetNormals(f, b)) normals.push_back(n);
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      const Vec3 line = cross(normals[i], normals[j]);
      if (line == Vec3{0, 0, 0}) continue;
      for (int sign : {1, -1}) {
        const Vec3 x{sign * line[0], sign * line[1], sign * line[2]};
        if (!std::all_of(normals.begin(), normals.end(), [&](const Vec3& n) { return dot(n, x) >= 0; })) continue;
        const Vec3 c = coordinates(f.rays[a[0]], f.rays[a[1]], f.rays[a[2]], x);
        for (std::size_t k = 0; k < 3; ++k)
          if (c[k] != 0 && !contains(b, a[k])) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<std::string> validateFan(const Fan& f) {
  std::vector<std::string> issues;
  std::set<Vec3> seen;
  for (std::size_t r = 0; r < f.rays.size(); ++r) {
    const auto& v = f.rays[r];
    const std::int64_t g = std::gcd(std::gcd(v[0], v[1]), v[2]);
    if (g == 0) issues.push_back("ray " + std::to_string(r) + " is zero");
    else if (g != 1) issues.push_back("ray " + std::to_string(r) + " " + show(v) + " is not primitive");
    if (!seen.insert(v).second) issues.push_back("duplicate ray " + show(v));
  }

  std::set<std::set<std::size_t>> coneSets;
  std::vector<bool> smooth(f.cones.size(), false);
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const auto& k = f.cones[c];
    const std::set<std::size_t> s(k.begin(), k.end());
    if (s.size() != 3 || *s.rbegin() >= f.rays.size()) {
      issues.push_back("cone " + std::to_string(c) + " does not have three distinct valid rays");
      continue;
    }
    if (!coneSets.insert(s).second) issues.push_back("duplicate cone " + std::to_string(c));
    const std::int64_t d = det3(f.rays[k[0]], f.rays[k[1]], f.rays[k[2]]);
    if (d != 1 && d != -1) {
      issues.push_back("non-unimodular cone " + std::to_string(c) + " (det = " + std::to_string(d) + ")");
      continue;
    }
    smooth[c] = true;
  }
  if (!issues.empty()) return issues;

  for (const auto& [wall, cones] : wallIncidence(f))
    if (cones.size() > 2)
      issues.push_back("wall (" + std::to_string(wall.first) + "," + std::to_string(wall.second) + ") lies in " +
                       std::to_string(cones.size()) + " cones");
  for (std::size_t a = 0; a < f.cones.size(); ++a)
    for (std::size_t b = a + 1; b < f.cones.size(); ++b)
      if (!meetProperly(f, f.cones[a], f.cones[b]))
        issues.push_back("cones " + std::to_string(a) + " and " + std::to_string(b) + " intersect improperly");
  return issues;
}

std::vector<Wall> fanWalls(const Fan& f) {
  std::vector<Wall> walls;
  for (const auto& [wall, cones] : wallIncidence(f)) walls.push_back(wall);
  return walls;
}

WallReport wallData(const Fan& f, Wall wall) {
  if (wall.first > wall.second) std::swap(wall.first, wall.second);
  WallReport report;
  report.wall = wall;
  for (std::size_t c = 0; c < f.cones.size(); ++c)
    if (contains(f.cones[c], wall.first) && contains(f.cones[c], wall.second)) report.adjacentCones.push_back(c);
  if (report.adjacentCones.empty())
    throw Error(ErrorCode::NotAWall, "rays " + std::to_string(wall.first) + " and " + std::to_string(wall.second) +
                                         " do not span a wall");
  if (report.adjacentCones.size() > 2) throw Error(ErrorCode::InvalidFan, "wall lies in more than two cones");
  if (report.adjacentCones.size() == 1) return report;

  const auto& cone1 = f.cones[report.adjacentCones[0]];
  const auto& cone2 = f.cones[report.adjacentCones[1]];
  const std::size_t w1 = thirdRay(cone1, wall.first, wall.second);
  const std::size_t w2 = thirdRay(cone2, wall.first, wall.second);
  const std::int64_t a = starSelfIntersection(f, wall.first, wall.second, w1, w2);
  const std::int64_t b = starSelfIntersection(f, wall.second, wall.first, w1, w2);
  report.selfIntersectionFirst = a;
  report.selfIntersectionSecond = b;
  report.defect = a + b + 2;
  report.anticanonicalDegree = dot(sub(supportFunction(f, cone1), supportFunction(f, cone2)), f.rays[w1]);
  return report;
}

DecoratedGraph boundaryGraph(const Fan& f) {
  const auto issues = validateFan(f);
  if (!issues.empty()) throw Error(ErrorCode::InvalidFan, issues.front());

  DecoratedGraph g;
  // Half-edge 3c + k is the k-th wall of cone c in its positive cyclic order.
  std::map<std::pair<std::size_t, Wall>, int> halfOf;
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    auto rays = f.cones[c];
    if (det3(f.rays[rays[0]], f.rays[rays[1]], f.rays[rays[2]]) < 0) std::swap(rays[1], rays[2]);
    Vertex v;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t p = rays[k];
      const std::size_t q = rays[(k + 1) % 3];
      const int half = static_cast<int>(3 * c + k);
      halfOf[{c, Wall{std::min(p, q), std::max(p, q)}}] = half;
      v.halfEdges.push_back(half);
    }
    g.vertices.push_back(std::move(v));
  }
  for (const Wall& wall : fanWalls(f)) {
    const WallReport report = wallData(f, wall);
    if (!report.interior()) {
      g.edges.emplace_back(Leg{halfOf.at({report.adjacentCones[0], wall})});
      continue;
    }
    CompactEdge e;
    e.halfA = halfOf.at({report.adjacentCones[0], wall});
    e.halfB = halfOf.at({report.adjacentCones[1], wall});
    e.twist = *report.defect;
    e.selfIntersections = std::make_pair(*report.selfIntersectionFirst, *report.selfIntersectionSecond);
    g.edges.emplace_back(e);
  }
  return g;
}

namespace {

std::vector<std::int64_t> normalizeCycle(const std::vector<std::int64_t>& seq) {
  if (seq.empty()) return seq;
  std::vector<std::int64_t> best = seq;
  for (const auto& base : {seq, std::vector<std::int64_t>(seq.rbegin(), seq.rend())})
    for (std::size_t shift = 0; shift < base.size(); ++shift) {
      std::vector<std::int64_t> rotated(base.begin() + static_cast<std::ptrdiff_t>(shift), base.end());
      rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(shift));
      best = std::min(best, rotated);
    }
  return best;
}

}  // namespace

std::vector<DivisorDescriptor> divisorClassification(const Fan& f) {
  const auto issues = validateFan(f);
  if (!issues.empty()) throw Error(ErrorCode::InvalidFan, issues.front());

  std::vector<DivisorDescriptor> out;
  for (std::size_t ray = 0; ray < f.rays.size(); ++ray) {
    // The star of `ray` as a 2D fan: neighbouring rays and the 2-cones between them.
    std::map<std::size_t, std::vector<std::size_t>> neighbours;
    std::size_t basisCone = f.cones.size();
    for (std::size_t c = 0; c < f.cones.size(); ++c) {
      const auto& k = f.cones[c];
      if (!contains(k, ray)) continue;
      if (basisCone == f.cones.size()) basisCone = c;
      std::vector<std::size_t> others;
      for (std::size_t r : k)
        if (r != ray) others.push_back(r);
      neighbours[others[0]].push_back(others[1]);
      neighbours[others[1]].push_back(others[0]);
    }
    DivisorDescriptor d;
    d.ray = ray;
    if (basisCone == f.cones.size()) {
      d.complete = false;
      out.push_back(d);
      continue;
    }
    std::vector<std::size_t> basisOthers;
    for (std::size_t r : f.cones[basisCone])
      if (r != ray) basisOthers.push_back(r);
    auto image = [&](std::size_t r) {
      const Vec3 c = coordinates(f.rays[basisOthers[0]], f.rays[basisOthers[1]], f.rays[ray], f.rays[r]);
      return std::array<std::int64_t, 2>{c[0], c[1]};
    };

    // Walk around the star; start at a path end if the star is not complete.
    std::size_t start = neighbours.begin()->first;
    d.complete = true;
    for (const auto& [r, adj] : neighbours)
      if (adj.size() == 1) {
        start = r;
        d.complete = false;
        break;
      }
    std::vector<std::size_t> order{start};
    std::size_t previous = f.rays.size();
    for (std::size_t current = start;;) {
      std::size_t next = f.rays.size();
      for (std::size_t cand : neighbours[current])
        if (cand != previous) {
          next = cand;
          break;
        }
      if (next == f.rays.size() || next == start) break;
      order.push_back(next);
      previous = current;
      current = next;
    }

    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!d.complete && (i == 0 || i + 1 == n)) continue;
      const auto u = image(order[i]);
      const auto p = image(order[(i + n - 1) % n]);
      const auto q = image(order[(i + 1) % n]);
      const std::array<std::int64_t, 2> sum{p[0] + q[0], p[1] + q[1]};
      if (sum[0] * u[1] - sum[1] * u[0] != 0)
        throw Error(ErrorCode::InvalidFan, "star of ray " + std::to_string(ray) + " is not smooth");
      const std::int64_t s = u[0] != 0 ? -sum[0] / u[0] : -sum[1] / u[1];
      d.selfIntersections.push_back(s);
    }
    if (d.complete) {
      d.selfIntersections = normalizeCycle(d.selfIntersections);
    } else {
      std::vector<std::int64_t> reversed(d.selfIntersections.rbegin(), d.selfIntersections.rend());
      d.selfIntersections = std::min(d.selfIntersections, reversed);
    }
    out.push_back(std::move(d));
  }
  return out;
}

Fan projectiveSpaceFan() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

Fan resolvedConifoldFan() {
  return {{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, {{0, 1, 3}, {0, 2, 3}}};
}

Fan p1CubedFan() {
  Fan f;
  f.rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (std::size_t x : {0, 1})
    for (std::size_t y : {2, 3})
      for (std::size_t z : {4, 5}) f.cones.push_back({x, y, z});
  return f;
}

Fan quarticMirrorFan() {
  const std::array<Vec3, 4> corners{{{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}};
  constexpr std::int64_t kSide = 4;

  std::set<Vec3> points;
  std::set<std::array<Vec3, 3>> triangles;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<Vec3> face;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != skip) face.push_back(corners[k]);
    const Vec3 dx = sub(face[1], face[0]);
    const Vec3 dy = sub(face[2], face[0]);
    auto at = [&](std::int64_t i, std::int64_t j) {
      return Vec3{face[0][0] + (i * dx[0] + j * dy[0]) / kSide, face[0][1] + (i * dx[1] + j * dy[1]) / kSide,
                  face[0][2] + (i * dx[2] + j * dy[2]) / kSide};
    };
    auto add = [&](Vec3 a, Vec3 b, Vec3 c) {
      std::array<Vec3, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      triangles.insert(t);
    };
    for (std::int64_t i = 0; i <= kSide; ++i)
      for (std::int64_t j = 0; i + j <= kSide; ++j) {
        points.insert(at(i, j));
        if (i + j + 1 <= kSide) add(at(i, j), at(i + 1, j), at(i, j + 1));
        if (i + j + 2 <= kSide) add(at(i + 1, j), at(i, j + 1), at(i + 1, j + 1));
      }
  }

  Fan f;
  f.rays.assign(points.begin(), points.end());
  std::map<Vec3, std::size_t> index;
  for (std::size_t r = 0; r < f.rays.size(); ++r) index[f.rays[r]] = r;
  for (const auto& t : triangles) {
    std::array<std::size_t, 3> cone{index[t[0]], index[t[1]], index[t[2]]};
    std::sort(cone.begin(), cone.end());
    f.cones.push_back(cone);
  }
  std::sort(f.cones.begin(), f.cones.end());
  return f;
}

}  // namespace ncsing
