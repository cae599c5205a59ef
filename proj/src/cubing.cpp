#include "houghton/cubing.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"

namespace houghton {

std::optional<int> Ball::find(Element const& e) const {
  auto it = index.find(e);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool Ball::adjacent(int u, int v) const {
  auto const& row = adjacency_.at(static_cast<std::size_t>(u));
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<int> Ball::neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

namespace {

std::vector<Element> up_neighbors(Element const& v) {
  std::vector<Element> out;
  for (int i = 1; i <= v.rays(); ++i) out.push_back(compose(make_t(v.rays(), i), v));
  return out;
}

// Subsets of `coords` satisfying the distinct-coordinates rule, sizes 2..max_size.
void coordinate_subsets(std::vector<std::pair<MaxCoord, Element>> const& coords, int max_size, std::size_t next,
                        std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= 2) out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (std::size_t j = next; j < coords.size(); ++j) {
    bool ok = true;
    for (std::size_t i : cur)
      ok = ok && coords[i].first.gen != coords[j].first.gen && coords[i].first.miss != coords[j].first.miss;
    if (!ok) continue;
    cur.push_back(j);
    coordinate_subsets(coords, max_size, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Element>> cubes_below(Element const& top, int max_dim) {
  std::vector<std::vector<Element>> out;
  if (top.height() == 0 || max_dim < 2) return out;
  auto const coords = maximal_elements(top);
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  coordinate_subsets(coords, max_dim, 0, cur, subsets);
  for (auto const& s : subsets) {
    std::size_t const k = s.size();
    std::vector<Element> verts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Element> chosen;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) chosen.push_back(coords[s[b]].second);
      if (chosen.empty()) {
        verts.push_back(top);
        continue;
      }
      auto g = glb_many(chosen);
      if (!g) throw InvariantViolation("coordinate rule predicts a cube below " + to_string(top) + " but a glb is missing");
      verts.push_back(*g);
    }
    out.push_back(std::move(verts));
  }
  return out;
}

Ball build_ball(Element const& center, BallLimits const& limits) {
  if (limits.radius < 0 || limits.height_cap < 0) throw IndexOutOfRange("ball radius and height cap must be >= 0");
  if (center.height() > limits.height_cap) throw IndexOutOfRange("center lies above the height cap");
  Ball ball;
  ball.n = center.rays();
  ball.limits = limits;
  auto add = [&ball, &limits](Element const& e, int d) {
    if (ball.vertices.size() >= limits.max_vertices)
      throw BudgetExceeded("ball exceeds " + std::to_string(limits.max_vertices) + " vertices (radius " +
                           std::to_string(limits.radius) + ", height cap " + std::to_string(limits.height_cap) + ")");
    int const id = static_cast<int>(ball.vertices.size());
    ball.vertices.push_back(e);
    ball.depth.push_back(d);
    ball.index.emplace(e, id);
  };
  add(center, 0);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    int const d = ball.depth[v];
    if (d == limits.radius) continue;
    Element const cur = ball.vertices[v];
    std::vector<Element> next;
    if (cur.height() < limits.height_cap) next = up_neighbors(cur);
    for (auto& [c, e] : maximal_elements(cur)) next.push_back(std::move(e));
    for (auto const& e : next)
      if (!ball.index.count(e)) add(e, d + 1);
  }

  ball.adjacency_.assign(ball.vertices.size(), {});
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    auto const ups = up_neighbors(ball.vertices[v]);
    for (int i = 1; i <= ball.n; ++i) {
      if (auto u = ball.find(ups[i - 1])) {
        ball.edges.push_back({static_cast<int>(v), *u, i});
        ball.adjacency_[v].push_back(*u);
        ball.adjacency_[*u].push_back(static_cast<int>(v));
      }
    }
  }
  for (auto& row : ball.adjacency_) std::sort(row.begin(), row.end());

  int const cube_dim = limits.max_cube_dim < 0 ? ball.n : limits.max_cube_dim;
  ball.cubes.assign(static_cast<std::size_t>(std::max(cube_dim, 1) + 1), {});
  if (cube_dim >= 2) {
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      for (auto const& cube : cubes_below(ball.vertices[v], cube_dim)) {
        std::vector<int> ids;
        for (auto const& e : cube) {
          auto id = ball.find(e);
          if (!id) break;
          ids.push_back(*id);
        }
        if (ids.size() != cube.size()) continue;
        std::sort(ids.begin(), ids.end());
        std::size_t k = 0;
        while ((std::size_t{1} << k) < ids.size()) ++k;
        ball.cubes[k].push_back(std::move(ids));
      }
    }
  }
  return ball;
}

namespace {

// Grows simplices by adding larger vertex ids; `extends(simplex, v)` decides.
SimplicialComplex grow_complex(int vertex_count, int max_dim,
                               std::function<bool(Simplex const&, int)> const& extends) {
  SimplicialComplex out(vertex_count, max_dim);
  std::function<void(Simplex&)> grow = [&](Simplex& s) {
    if (static_cast<int>(s.size()) == max_dim + 1) return;
    for (int v = s.back() + 1; v < vertex_count; ++v) {
      if (!extends(s, v)) continue;
      s.push_back(v);
      out.add(s);
      grow(s);
      s.pop_back();
    }
  };
  for (int v = 0; v < vertex_count; ++v) {
    Simplex s{v};
    grow(s);
  }
  return out;
}

// A set of maximal elements of v spans a cube at v when it has a lower bound
// exactly |set| below v.
bool spans_down(Element const& v, std::vector<Element> const& chosen) {
  if (chosen.empty()) return true;
  auto g = glb_many(chosen);
  return g && g->height() == v.height() - static_cast<int>(chosen.size());
}

}  // namespace

DescendingLink descending_link(Element const& v, int max_dim) {
  DescendingLink out{{}, SimplicialComplex(0, 0)};
  auto const coords = maximal_elements(v);
  for (auto const& [c, e] : coords) out.coords.push_back(c);
  int const dim = max_dim < 0 ? std::max(std::min(v.rays(), v.height()) - 1, 0) : max_dim;
  int const count = static_cast<int>(coords.size());
  out.complex = grow_complex(count, dim, [&](Simplex const& s, int u) {
    std::vector<Element> chosen;
    for (int i : s) chosen.push_back(coords[i].second);
    chosen.push_back(coords[u].second);
    return spans_down(v, chosen);
  });
  return out;
}

SimplicialComplex full_link(Element const& v, int max_dim) {
  int const n = v.rays();
  auto const coords = maximal_elements(v);
  int const count = n + static_cast<int>(coords.size());
  return grow_complex(count, max_dim, [&](Simplex const& s, int u) {
    std::vector<int> gens;
    std::vector<Element> down;
    for (int i : s) {
      if (i < n) {
        gens.push_back(i + 1);
      } else {
        gens.push_back(coords[i - n].first.gen);
        down.push_back(coords[i - n].second);
      }
    }
    int const g = u < n ? u + 1 : coords[u - n].first.gen;
    if (std::find(gens.begin(), gens.end(), g) != gens.end()) return false;
    if (u >= n) down.push_back(coords[u - n].second);
    return spans_down(v, down);
  });
}

std::vector<Element> down_set(Element const& top, int floor_height, std::size_t max_candidates) {
  std::vector<Element> out{top};
  std::unordered_set<Element, ElementHash> seen{top};
  std::vector<Element> level{top};
  for (int h = top.height(); h > std::max(floor_height, 0); --h) {
    std::vector<Element> next;
    for (auto const& e : level) {
      for (auto& [c, m] : maximal_elements(e)) {
        if (!seen.insert(m).second) continue;
        if (seen.size() > max_candidates)
          throw BudgetExceeded("interval search region exceeds " + std::to_string(max_candidates) + " elements");
        next.push_back(m);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> geodesic_interval(Element const& a, Element const& b, std::size_t max_candidates) {
  // Every vertex of the interval lies on a geodesic from a, so walking only
  // along edges that bring b one step closer visits exactly the interval.
  std::unordered_set<Element, ElementHash> seen{a};
  std::vector<Element> out{a};
  std::vector<Element> level{a};
  for (int left = distance(a, b); left > 0; --left) {
    std::vector<Element> next;
    for (auto const& v : level) {
      std::vector<Element> nbrs = up_neighbors(v);
      for (auto& [c, e] : maximal_elements(v)) nbrs.push_back(std::move(e));
      for (auto& u : nbrs) {
        if (seen.count(u) || distance(u, b) != left - 1) continue;
        seen.insert(u);
        if (seen.size() > max_candidates)
          throw BudgetExceeded("geodesic interval exceeds " + std::to_string(max_candidates) + " elements");
        next.push_back(std::move(u));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element median(Element const& a, Element const& b, Element const& c, std::size_t max_candidates) {
  int const dbc = distance(b, c);
  int const dac = distance(a, c);
  std::vector<Element> hits;
  for (auto const& v : geodesic_interval(a, b, max_candidates))
    if (distance(b, v) + distance(v, c) == dbc && distance(a, v) + distance(v, c) == dac) hits.push_back(v);
  if (hits.size() != 1)
    throw InvariantViolation("median of " + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + " has " +
                             std::to_string(hits.size()) + " candidates");
  return hits.front();
}

std::optional<int> bfs_distance(Element const& a, Element const& b, int max_depth) {
  if (a == b) return 0;
  using Frontier = std::unordered_map<Element, int, ElementHash>;
  Frontier seen_a{{a, 0}}, seen_b{{b, 0}};
  std::vector<Element> front_a{a}, front_b{b};
  int depth_a = 0, depth_b = 0;
  while (depth_a + depth_b < max_depth && !front_a.empty() && !front_b.empty()) {
    bool const grow_a = front_a.size() <= front_b.size();
    auto& front = grow_a ? front_a : front_b;
    auto& mine = grow_a ? seen_a : seen_b;
    auto const& other = grow_a ? seen_b : seen_a;
    int& depth = grow_a ? depth_a : depth_b;
    ++depth;
    std::vector<Element> next;
    std::optional<int> best;
    for (auto const& v : front) {
      std::vector<Element> nbrs = up_neighbors(v);
      for (auto& [c, e] : maximal_elements(v)) nbrs.push_back(std::move(e));
      for (auto& u : nbrs) {
        if (mine.count(u)) continue;
        if (auto it = other.find(u); it != other.end()) {
          int const d = depth + it->second;
          best = best ? std::min(*best, d) : d;
        }
        mine.emplace(u, depth);
        next.push_back(std::move(u));
      }
    }
    if (best) return best;
    front = std::move(next);
  }
  return std::nullopt;
}

ContractionTrace contract_loop(Ball const& ball, std::vector<int> const& loop) {
  if (loop.empty()) throw MalformedElement("loop is empty");
  for (std::size_t i = 0; i < loop.size() && loop.size() > 1; ++i) {
    int const u = loop[i];
    int const v = loop[(i + 1) % loop.size()];
    if (!ball.adjacent(u, v))
      throw MalformedElement("loop step " + std::to_string(u) + " -> " + std::to_string(v) + " is not an edge");
  }
  ContractionTrace trace;
  std::vector<int> cur = loop;
  while (cur.size() > 1) {
    int low = ball.height(cur[0]);
    for (int v : cur) low = std::min(low, ball.height(v));
    ++trace.sweeps;
    for (;;) {
      auto it = std::find_if(cur.begin(), cur.end(), [&](int v) { return ball.height(v) == low; });
      if (it == cur.end() || cur.size() == 1) break;
      std::size_t const i = static_cast<std::size_t>(it - cur.begin());
      std::size_t const L = cur.size();
      int const prev = cur[(i + L - 1) % L];
      int const next = cur[(i + 1) % L];
      if (prev == next) {
        trace.steps.push_back({ContractionStep::Kind::Backtrack, cur[i], prev});
        if (L == 2) {
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          std::size_t const j = (i + 1) % L;
          std::size_t const first = std::max(i, j), second = std::min(i, j);
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(first));
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(second));
        }
        continue;
      }
      Element const lifted = lub(ball.vertices[static_cast<std::size_t>(prev)], ball.vertices[static_cast<std::size_t>(next)]);
      auto id = ball.find(lifted);
      if (!id)
        throw BudgetExceeded("ball too small: lifting needs a vertex of height " + std::to_string(lifted.height()) +
                             " outside the ball");
      trace.steps.push_back({ContractionStep::Kind::Lift, cur[i], *id});
      cur[i] = *id;
    }
  }
  trace.final_vertex = cur.front();
  return trace;
}

}  // namespace houghton
