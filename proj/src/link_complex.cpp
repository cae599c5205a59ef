#include "houghton/link_complex.hpp"

#include <algorithm>
#include <numeric>

#include "houghton/errors.hpp"

namespace houghton {

SimplicialComplex::SimplicialComplex(int vertex_count, int max_dim)
    : vertex_count_(vertex_count), faces_(static_cast<std::size_t>(std::max(max_dim, 0) + 1)) {
  if (vertex_count < 0) throw IndexOutOfRange("negative vertex count");
  for (int v = 0; v < vertex_count; ++v) faces_[0].insert({v});
}

void SimplicialComplex::add(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw MalformedElement("simplex has a repeated vertex");
  for (int v : s)
    if (v < 0 || v >= vertex_count_) throw IndexOutOfRange("simplex vertex out of range");
  int const k = static_cast<int>(s.size());
  if (k == 0 || k - 1 > max_dim()) return;
  if (!faces_[k - 1].insert(s).second) return;
  for (int drop = 0; drop < k && k > 1; ++drop) {
    Simplex face;
    for (int i = 0; i < k; ++i)
      if (i != drop) face.push_back(s[i]);
    add(std::move(face));
  }
}

bool SimplicialComplex::contains(Simplex const& s) const {
  if (s.empty() || static_cast<int>(s.size()) - 1 > max_dim()) return false;
  return faces_[s.size() - 1].count(s) > 0;
}

std::set<Simplex> const& SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || dim > max_dim()) throw IndexOutOfRange("dimension beyond the stored skeleton");
  return faces_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::count(int dim) const { return dim > max_dim() ? 0 : simplices(dim).size(); }

int grid_vertex(int h, int x, int y) { return (x - 1) * h + (y - 1); }

namespace {

// Extends `rows` (distinct, increasing x) with an injective choice of y's.
void place_columns(int h, std::vector<int> const& rows, std::size_t at, std::vector<bool>& used, Simplex& cur,
                   SimplicialComplex& out) {
  if (at == rows.size()) {
    out.add(cur);
    return;
  }
  for (int y = 1; y <= h; ++y) {
    if (used[y]) continue;
    used[y] = true;
    cur.push_back(grid_vertex(h, rows[at], y));
    place_columns(h, rows, at + 1, used, cur, out);
    cur.pop_back();
    used[y] = false;
  }
}

void choose_rows(int n, int h, int size, int next, std::vector<int>& rows, SimplicialComplex& out) {
  if (static_cast<int>(rows.size()) == size) {
    std::vector<bool> used(static_cast<std::size_t>(h + 1), false);
    Simplex cur;
    place_columns(h, rows, 0, used, cur, out);
    return;
  }
  for (int x = next; x <= n; ++x) {
    rows.push_back(x);
    choose_rows(n, h, size, x + 1, rows, out);
    rows.pop_back();
  }
}

}  // namespace

SimplicialComplex link_complex(int n, int h, int max_dim) {
  if (n < 1 || h < 0) throw IndexOutOfRange("link_complex needs n >= 1 and h >= 0");
  int const top = std::min(n, h) - 1;
  int const dim = max_dim < 0 ? std::max(top, 0) : max_dim;
  SimplicialComplex out(n * h, dim);
  // Only maximal-size choices are needed; add() inserts the faces.
  int const size = std::min(top, dim) + 1;
  if (size >= 1) {
    std::vector<int> rows;
    choose_rows(n, h, size, 1, rows, out);
  }
  return out;
}

std::uint64_t link_face_count(int n, int h, int d) {
  int const k = d + 1;
  if (k < 1 || k > n || k > h) return 0;
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  for (int i = 0; i < k; ++i) c *= static_cast<std::uint64_t>(h - i);
  return c;
}

namespace {

bool extend_cliques(SimplicialComplex const& c, std::vector<std::vector<bool>> const& adj, Simplex& clique) {
  if (static_cast<int>(clique.size()) >= 3 && !c.contains(clique)) return false;
  if (static_cast<int>(clique.size()) == c.max_dim() + 1) return true;
  for (int v = clique.empty() ? 0 : clique.back() + 1; v < c.vertex_count(); ++v) {
    bool ok = true;
    for (int u : clique) ok = ok && adj[u][v];
    if (!ok) continue;
    clique.push_back(v);
    bool const fine = extend_cliques(c, adj, clique);
    clique.pop_back();
    if (!fine) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Rank over GF(2) of a set of sparse rows given as column lists.
int gf2_rank(std::vector<std::vector<int>> const& rows, int columns) {
  std::size_t const words = (static_cast<std::size_t>(columns) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> dense;
  dense.reserve(rows.size());
  for (auto const& r : rows) {
    std::vector<std::uint64_t> bits(words, 0);
    for (int c : r) bits[static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64);
    dense.push_back(std::move(bits));
  }
  int rank = 0;
  std::size_t row = 0;
  for (int col = 0; col < columns && row < dense.size(); ++col) {
    std::size_t const w = static_cast<std::size_t>(col) / 64;
    std::uint64_t const bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row;
    while (pivot < dense.size() && !(dense[pivot][w] & bit)) ++pivot;
    if (pivot == dense.size()) continue;
    std::swap(dense[pivot], dense[row]);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (r == row || !(dense[r][w] & bit)) continue;
      for (std::size_t k = 0; k < words; ++k) dense[r][k] ^= dense[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_flag(SimplicialComplex const& c) {
  int const n = c.vertex_count();
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  if (c.max_dim() >= 1)
    for (auto const& e : c.simplices(1)) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  Simplex clique;
  return extend_cliques(c, adj, clique);
}

HomologyProfile homology_profile(SimplicialComplex const& c) {
  HomologyProfile out;
  for (int d = 0; d <= c.max_dim(); ++d)
    out.euler += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.count(d));
  UnionFind uf(c.vertex_count());
  int components = c.vertex_count();
  std::vector<Simplex> edges;
  if (c.max_dim() >= 1) edges.assign(c.simplices(1).begin(), c.simplices(1).end());
  for (auto const& e : edges)
    if (uf.unite(e[0], e[1])) --components;
  out.b0 = components;
  int rank2 = 0;
  if (c.max_dim() >= 2 && !edges.empty()) {
    std::vector<std::vector<int>> rows;
    for (auto const& t : c.simplices(2)) {
      std::vector<int> cols;
      for (Simplex const& e : {Simplex{t[0], t[1]}, Simplex{t[0], t[2]}, Simplex{t[1], t[2]}})
        cols.push_back(static_cast<int>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin()));
      rows.push_back(std::move(cols));
    }
    rank2 = gf2_rank(rows, static_cast<int>(edges.size()));
  }
  int const cycles = static_cast<int>(edges.size()) - (c.vertex_count() - components);
  out.b1_mod2 = cycles - rank2;
  return out;
}

HomologyProfile link_homotopy_profile(int n, int h, std::uint64_t max_faces) {
  std::uint64_t faces = 0;
  for (int d = 0; d <= 2; ++d) faces += link_face_count(n, h, d);
  if (faces > max_faces)
    throw BudgetExceeded("L_{" + std::to_string(n) + "," + std::to_string(h) + "} 2-skeleton has " + std::to_string(faces) +
                         " faces, cap " + std::to_string(max_faces));
  SimplicialComplex const skeleton = link_complex(n, h, 2);
  HomologyProfile out = homology_profile(skeleton);
  out.euler = 0;
  for (int d = 0; d < std::min(n, h); ++d)
    out.euler += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(link_face_count(n, h, d));
  return out;
}

}  // namespace houghton
