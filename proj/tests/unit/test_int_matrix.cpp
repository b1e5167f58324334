#include <doctest.h>

#include <random>

#include "ncsing/cycles.hpp"
#include "ncsing/error.hpp"
#include "ncsing/int_matrix.hpp"
#include "oracles.hpp"

using ncsing::AbelianGroup;
using ncsing::Integer;
using ncsing::IntMatrix;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("smith form of small fixed matrices") {
  CHECK(ncsing::snf(IntMatrix{{1, 0}, {0, 1}}).diagonal == ints({1, 1}));
  CHECK(ncsing::snf(IntMatrix{{2, 4}, {6, 8}}).diagonal == ints({2, 4}));
  CHECK(ncsing::snf(IntMatrix{{2, 3}}).diagonal == ints({1}));
  CHECK(ncsing::snf(IntMatrix{{0, 0}, {0, 0}}).diagonal == ints({0, 0}));
  CHECK(ncsing::snf(IntMatrix{{0, 6}, {4, 0}}).diagonal == ints({2, 12}));
  CHECK(ncsing::snf(IntMatrix(0, 3)).diagonal.empty());
}

TEST_CASE("cokernel of small fixed matrices") {
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix{{0}}) == AbelianGroup{1, {}});
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix{{3}}) == AbelianGroup{0, ints({3})});
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix{{2, 0}, {0, 2}}) == AbelianGroup{0, ints({2, 2})});
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix{{1}, {0}}) == AbelianGroup{1, {}});
  // Generators index rows: three generators, no relations.
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix(3, 0)) == AbelianGroup{3, {}});
  CHECK(ncsing::cokernelAbelianGroup(IntMatrix{{4, 6}}) == AbelianGroup{0, ints({2})});
}

TEST_CASE("determinant") {
  CHECK(ncsing::determinant(IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}) == 2);
  CHECK(ncsing::determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(ncsing::determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(ncsing::determinant(IntMatrix(2, 3)), ncsing::Error);
}

TEST_CASE("smith form agrees with determinantal divisors and transforms") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto small = oracle::randomMatrix(rng, dim(rng), dim(rng), 9);
    const IntMatrix m = oracle::toIntMatrix(small);
    const auto form = ncsing::snf(m);
    const std::size_t k = std::min(m.rows(), m.cols());
    REQUIRE(form.diagonal.size() == k);

    const IntMatrix product = form.left * m * form.right;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        CHECK(product(r, c) == (r == c ? form.diagonal[r] : Integer(0)));
    CHECK(abs(ncsing::determinant(form.left)) == 1);
    CHECK(abs(ncsing::determinant(form.right)) == 1);

    Integer running = 1;
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(form.diagonal[i] >= 0);
      if (i + 1 < k && form.diagonal[i] != 0) CHECK(form.diagonal[i + 1] % form.diagonal[i] == 0);
      if (i > 0 && form.diagonal[i - 1] == 0) CHECK(form.diagonal[i] == 0);
      running *= form.diagonal[i];
      CHECK(running == oracle::minorGcd(small, i + 1));
    }
    CHECK(form.rank() == oracle::rationalRank(small));
  }
}

TEST_CASE("cokernel agrees with brute-force enumeration") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 150; ++trial) {
    const std::size_t rows = 1 + trial % 2;
    const auto small = oracle::randomMatrix(rng, rows, rows + trial % 3, 6);
    const std::int64_t order = oracle::minorGcd(small, rows);
    if (order == 0 || order > 200) continue;
    ++checked;
    const auto group = ncsing::cokernelAbelianGroup(oracle::toIntMatrix(small));
    CHECK(group.freeRank == 0);
    std::vector<std::int64_t> torsion;
    for (const auto& t : group.torsion) {
      CHECK(t > 1);
      torsion.push_back(static_cast<std::int64_t>(t));
    }
    CHECK(oracle::killCountsOf(torsion, order) == oracle::killCounts(small, order));
  }
  CHECK(checked == 150);
}

TEST_CASE("cokernel free rank is generators minus rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto small = oracle::randomMatrix(rng, 1 + trial % 5, trial % 4, 2);
    const auto group = ncsing::cokernelAbelianGroup(oracle::toIntMatrix(small));
    CHECK(group.freeRank == static_cast<long>(small.size() - oracle::rationalRank(small)));
  }
}

TEST_CASE("cycle basis examples") {
  using ncsing::VertexPair;
  const std::vector<VertexPair> triangle{{0, 1}, {1, 2}, {2, 0}};
  const auto tri = ncsing::cycleBasis(3, triangle);
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].size() == 3);

  const std::vector<VertexPair> path{{0, 1}, {1, 2}};
  CHECK(ncsing::cycleBasis(3, path).empty());

  const std::vector<VertexPair> theta{{0, 1}, {0, 1}, {0, 1}};
  const auto cycles = ncsing::cycleBasis(2, theta);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == ncsing::Cycle{{0, 1}, {1, -1}});
  CHECK(cycles[1] == ncsing::Cycle{{0, 1}, {2, -1}});
  CHECK(ncsing::spanningTree(2, theta) == std::vector<std::size_t>{0});

  const std::vector<VertexPair> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(ncsing::cycleBasis(4, split), ncsing::Error);
}

TEST_CASE("cycle basis cycles are closed and independent") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<ncsing::VertexPair> edges;
    for (std::size_t v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v});
    for (int extra = trial % 5; extra > 0; --extra) edges.push_back({pick(rng), pick(rng)});
    std::shuffle(edges.begin(), edges.end(), rng);

    const auto cycles = ncsing::cycleBasis(n, edges);
    CHECK(cycles.size() == edges.size() - n + 1);
    oracle::SmallMatrix incidence;
    for (const auto& cycle : cycles) {
      // Closed walk: consecutive steps share a vertex and it returns to the start.
      auto head = [&](const ncsing::SignedEdge& s) { return s.sign > 0 ? edges[s.edge].second : edges[s.edge].first; };
      auto tail = [&](const ncsing::SignedEdge& s) { return s.sign > 0 ? edges[s.edge].first : edges[s.edge].second; };
      for (std::size_t i = 0; i < cycle.size(); ++i) CHECK(head(cycle[i]) == tail(cycle[(i + 1) % cycle.size()]));
      std::vector<std::int64_t> row(edges.size(), 0);
      for (const auto& s : cycle) row[s.edge] += s.sign;
      incidence.push_back(row);
    }
    if (!incidence.empty()) CHECK(oracle::rationalRank(incidence) == cycles.size());
  }
}
