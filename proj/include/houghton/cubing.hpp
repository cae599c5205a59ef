#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/link_complex.hpp"
#include "houghton/poset.hpp"

namespace houghton {

// to = t_gen * from.
struct BallEdge {
  int from = 0;
  int to = 0;
  int gen = 0;

  friend bool operator==(BallEdge const&, BallEdge const&) = default;
};

struct BallLimits {
  int radius = 2;
  int height_cap = 4;
  std::size_t max_vertices = 200'000;
  int max_cube_dim = -1;  // < 0: n. 1 or less: no cubes.
};

// A finite piece of the Cayley graph of M_n around a center, found by BFS over
// up-edges (t_i) and down-edges (maximal elements). Vertex 0 is the center.
struct Ball {
  int n = 0;
  BallLimits limits;
  std::vector<Element> vertices;
  std::vector<int> depth;  // BFS distance from the center inside the ball
  std::vector<BallEdge> edges;
  std::vector<std::vector<std::vector<int>>> cubes;  // cubes[k]: vertex-id sets of k-cubes, k >= 2
  std::unordered_map<Element, int, ElementHash> index;

  std::optional<int> find(Element const& e) const;
  int height(int v) const { return vertices[static_cast<std::size_t>(v)].height(); }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;

 private:
  friend Ball build_ball(Element const& center, BallLimits const& limits);
  std::vector<std::vector<int>> adjacency_;
};

// Throws BudgetExceeded when the vertex cap is hit.
Ball build_ball(Element const& center, BallLimits const& limits);

// Vertex sets of all k-cubes (k >= 2, k <= max_dim) whose top vertex is `top`.
std::vector<std::vector<Element>> cubes_below(Element const& top, int max_dim);

// The descending link at v computed from glb existence among its maximal
// elements. Vertex ids follow the (gen, miss) order, which matches the grid
// numbering of link_complex(n, h(v)).
struct DescendingLink {
  std::vector<MaxCoord> coords;
  SimplicialComplex complex;
};

DescendingLink descending_link(Element const& v, int max_dim = -1);

// Full link at v: ids 0..n-1 are the ascending edges t_1..t_n, the rest are the
// descending edges in the order of descending_link.
SimplicialComplex full_link(Element const& v, int max_dim);

// All vertices on some geodesic from a to b, sorted. Throws BudgetExceeded when
// the search region exceeds `max_candidates`.
std::vector<Element> geodesic_interval(Element const& a, Element const& b, std::size_t max_candidates = 500'000);

// Throws InvariantViolation when the three intervals do not meet in one vertex.
Element median(Element const& a, Element const& b, Element const& c, std::size_t max_candidates = 500'000);

// Elements below `top` (inclusive) with height >= floor_height.
std::vector<Element> down_set(Element const& top, int floor_height, std::size_t max_candidates = 500'000);

// Edge distance in the full Cayley graph of M_n by bidirectional BFS over up-
// and down-edges; empty when it exceeds max_depth.
std::optional<int> bfs_distance(Element const& a, Element const& b, int max_depth);

struct ContractionStep {
  enum class Kind { Lift, Backtrack };
  Kind kind = Kind::Lift;
  int vertex = 0;       // the lowest vertex that was lifted or removed
  int replacement = 0;  // lifted position's new vertex; for backtracks, the surviving neighbour
};

struct ContractionTrace {
  std::vector<ContractionStep> steps;
  int sweeps = 0;
  int final_vertex = 0;
};

// Contracts a closed edge path (v0, ..., v_{L-1}, back to v0) to a vertex by
// lifting and backtrack removal at its lowest vertices. Throws BudgetExceeded
// when a lifted vertex lies outside the ball.
ContractionTrace contract_loop(Ball const& ball, std::vector<int> const& loop);

}  // namespace houghton
