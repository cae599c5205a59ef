#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "houghton/cubing.hpp"
#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/sampling.hpp"

using namespace houghton;

namespace {

Element sample(Rng& rng, int n, int max_height = 3) {
  return random_monoid_element(rng, n, rng.uniform(0, max_height), rng.uniform(0, 4));
}

}  // namespace

TEST_CASE("small balls") {
  BallLimits lim;
  lim.radius = 2;
  Ball const b = build_ball(Element::identity(1), lim);
  CHECK(b.vertices.size() == 3);
  CHECK(b.edges.size() == 2);

  lim.radius = 3;
  lim.height_cap = 2;
  Ball const path = build_ball(Element::identity(1), lim);
  CHECK(path.vertices.size() == 4);
  CHECK(path.edges.size() == 3);
  std::map<int, int> degree;
  for (auto const& e : path.edges) {
    ++degree[e.from];
    ++degree[e.to];
  }
  int leaves = 0;
  for (auto const& [v, d] : degree) leaves += d == 1;
  CHECK(leaves == 2);

  lim.height_cap = 5;
  CHECK(build_ball(Element::identity(1), lim).vertices.size() == 5);

  lim.max_vertices = 3;
  CHECK_THROWS_AS(build_ball(Element::identity(2), lim), BudgetExceeded);
  CHECK_THROWS_AS(build_ball(make_t(2, 1) * make_t(2, 1), BallLimits{2, 1}), IndexOutOfRange);
}

TEST_CASE("ball structure") {
  BallLimits lim;
  lim.radius = 3;
  lim.height_cap = 3;
  Ball const ball = build_ball(make_t(3, 2), lim);
  std::map<std::pair<int, int>, int> out_by_gen;
  std::set<std::pair<int, int>> pairs;
  for (auto const& e : ball.edges) {
    CHECK(ball.height(e.to) == ball.height(e.from) + 1);
    CHECK(ball.vertices[static_cast<std::size_t>(e.to)] == make_t(3, e.gen) * ball.vertices[static_cast<std::size_t>(e.from)]);
    CHECK(++out_by_gen[{e.from, e.gen}] == 1);
    CHECK(pairs.insert({std::min(e.from, e.to), std::max(e.from, e.to)}).second);
    CHECK(ball.adjacent(e.from, e.to));
  }
  // Every vertex strictly inside the height cap has all three up-edges present.
  for (std::size_t v = 0; v < ball.vertices.size(); ++v)
    if (ball.depth[v] < lim.radius && ball.height(static_cast<int>(v)) < lim.height_cap)
      for (int i = 1; i <= 3; ++i) CHECK(out_by_gen.count({static_cast<int>(v), i}));
}

TEST_CASE("cubes below a vertex count simplices of the link") {
  Rng rng(3);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Element const v = random_monoid_element(rng, n, rng.uniform(1, 4), rng.uniform(0, 4));
      SimplicialComplex const link = link_complex(n, v.height());
      auto const cubes = cubes_below(v, n);
      std::map<std::size_t, std::size_t> by_dim;
      for (auto const& c : cubes) {
        ++by_dim[c.size()];
        std::set<Element> distinct(c.begin(), c.end());
        CHECK(distinct.size() == c.size());
      }
      for (int d = 1; d <= link.max_dim(); ++d) CHECK(by_dim[std::size_t{1} << (d + 1)] == link.count(d));
    }
}

TEST_CASE("descending links are the grid complexes") {
  CHECK(descending_link(Element::identity(3)).complex.vertex_count() == 0);
  Rng rng(5);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      Element const v = random_monoid_element(rng, n, rng.uniform(0, 4), rng.uniform(0, 5));
      CHECK(descending_link(v).complex == link_complex(n, v.height()));
      CHECK(is_flag(full_link(v, std::min(n, 4))));
    }
}

TEST_CASE("geodesic intervals") {
  Element const t1 = make_t(2, 1), t2 = make_t(2, 2);
  CHECK(geodesic_interval(t1, t1) == std::vector<Element>{t1});
  auto const iv = geodesic_interval(t1, t2);
  std::vector<Element> expect{Element::identity(2), t1, t2, t1 * t2};
  std::sort(expect.begin(), expect.end());
  CHECK(iv == expect);

  // Cross-check against unrestricted BFS distances on the order box below lub.
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Element const a = sample(rng, 2, 2), b = sample(rng, 2, 2);
    int const d = distance(a, b);
    Element const top = lub(a, b);
    std::vector<Element> brute;
    for (auto const& v : down_set(top, top.height() - d)) {
      auto const da = bfs_distance(a, v, d), db = bfs_distance(v, b, d);
      if (da && db && *da + *db == d) brute.push_back(v);
    }
    std::sort(brute.begin(), brute.end());
    auto const got = geodesic_interval(a, b);
    CHECK(got == brute);
    // Closed under pairwise lub, and convex.
    for (std::size_t i = 0; i < got.size() && i < 6; ++i)
      for (std::size_t j = i + 1; j < got.size() && j < 6; ++j) {
        CHECK(std::binary_search(got.begin(), got.end(), lub(got[i], got[j])));
        for (auto const& w : geodesic_interval(got[i], got[j])) CHECK(std::binary_search(got.begin(), got.end(), w));
      }
  }
}

TEST_CASE("medians") {
  Rng rng(9);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      Element const a = sample(rng, n), b = sample(rng, n), c = sample(rng, n);
      CHECK(median(a, a, b) == a);
      Element const m = median(a, b, c);
      CHECK(median(b, c, a) == m);
      CHECK(distance(a, m) + distance(m, b) == distance(a, b));
      Element const g = random_group_element(rng, n, 5);
      CHECK(median(a * g, b * g, c * g) == m * g);
    }
}

TEST_CASE("distance formula agrees with BFS") {
  CHECK(bfs_distance(make_t(3, 1), make_t(3, 2), 5) == 2);
  CHECK_FALSE(bfs_distance(Element::identity(2), make_t(2, 1) * make_t(2, 1), 1));
  Rng rng(11);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      Element const a = sample(rng, n), b = sample(rng, n);
      CHECK(bfs_distance(a, b, distance(a, b)) == distance(a, b));
    }
}

TEST_CASE("stabilizers are the symmetric groups on the deficiency") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Element const v = random_monoid_element(rng, 2, rng.uniform(0, 3), rng.uniform(0, 4));
    // All permutations of a block of points containing S(v).
    std::vector<Point> block;
    for (int k = 1; k <= 2; ++k)
      for (int p = 1; p <= 3; ++p) block.push_back({k, p});
    for (auto const& s : deficiency(v))
      if (std::find(block.begin(), block.end(), s) == block.end()) block.push_back(s);
    if (block.size() > 8) continue;
    std::vector<int> perm(block.size());
    std::iota(perm.begin(), perm.end(), 0);
    int fixing = 0;
    do {
      Element::ExceptionTable table;
      for (std::size_t i = 0; i < block.size(); ++i) table.emplace_back(block[i], block[static_cast<std::size_t>(perm[i])]);
      Element const g(2, {0, 0}, table);
      if (v * g == v) {
        ++fixing;
        CHECK(stabilizer_check(v, g));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    int fact = 1;
    for (int i = 2; i <= v.height(); ++i) fact *= i;
    CHECK(fixing == fact);
  }
}

TEST_CASE("loop contraction") {
  BallLimits lim;
  lim.radius = 4;
  lim.height_cap = 4;
  Ball const ball = build_ball(Element::identity(2), lim);
  Element const id = Element::identity(2), t1 = make_t(2, 1), t2 = make_t(2, 2);
  int const a = *ball.find(id), b = *ball.find(t1), c = *ball.find(t1 * t2), d = *ball.find(t2);

  auto const square = contract_loop(ball, {a, b, c, d});
  CHECK(square.steps.front().kind == ContractionStep::Kind::Lift);
  CHECK(square.final_vertex == c);

  auto const back = contract_loop(ball, {a, b});
  CHECK(back.steps.size() == 1);
  CHECK(back.steps.front().kind == ContractionStep::Kind::Backtrack);
  CHECK_THROWS_AS(contract_loop(ball, {a, c}), MalformedElement);

  // Random loops: down a chain of maximal elements, back up along shuffled generators.
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    Element const top = random_monoid_element(rng, 2, 4, rng.uniform(0, 3));
    BallLimits around;
    around.radius = 6;
    around.height_cap = 4;
    Ball const local = build_ball(top, around);
    std::vector<int> loop{0};
    std::vector<int> gens;
    Element cur = top;
    for (int step = 0; step < 4; ++step) {
      auto const maxes = maximal_elements(cur);
      auto const& pick = maxes[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(maxes.size()) - 1))];
      gens.push_back(pick.first.gen);
      cur = pick.second;
      loop.push_back(*local.find(cur));
    }
    for (std::size_t s = gens.size(); s > 1; --s) std::swap(gens[s - 1], gens[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(s) - 1))]);
    for (std::size_t s = 0; s + 1 < gens.size(); ++s) {
      cur = make_t(2, gens[s]) * cur;
      REQUIRE(local.find(cur));
      loop.push_back(*local.find(cur));
    }
    // The remaining up-edge closes the loop because the t_i commute.
    REQUIRE(make_t(2, gens.back()) * cur == top);
    // An 8-cycle whose lub is its top vertex; the lowest vertex has height 0.
    REQUIRE(loop.size() == 8);
    int low = top.height();
    for (int v : loop) low = std::min(low, local.height(v));
    auto const trace = contract_loop(local, loop);
    CHECK(trace.final_vertex == 0);
    CHECK(trace.sweeps <= top.height() - low);
  }
}
