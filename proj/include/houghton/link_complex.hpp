#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace houghton {

using Simplex = std::vector<int>;  // sorted vertex ids

// A finite simplicial complex stored explicitly up to a dimension cap.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertex_count, int max_dim);

  int vertex_count() const noexcept { return vertex_count_; }
  int max_dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }

  // Inserts a simplex and all of its faces (up to the dimension cap).
  void add(Simplex s);
  bool contains(Simplex const& s) const;
  std::set<Simplex> const& simplices(int dim) const;
  std::size_t count(int dim) const;

  friend bool operator==(SimplicialComplex const&, SimplicialComplex const&) = default;

 private:
  int vertex_count_;
  std::vector<std::set<Simplex>> faces_;
};

// L_{n,h}: vertex (x,y) has id (x-1)*h + (y-1); a set spans a simplex iff its
// x's are pairwise distinct and its y's are pairwise distinct.
// max_dim < 0 means min(n,h) - 1.
SimplicialComplex link_complex(int n, int h, int max_dim = -1);

int grid_vertex(int h, int x, int y);

// Number of d-simplices of L_{n,h}: C(n,d+1) * h!/(h-d-1)!.
std::uint64_t link_face_count(int n, int h, int d);

// Every clique of size <= max_dim+1 in the 1-skeleton is a stored simplex.
bool is_flag(SimplicialComplex const& c);

struct HomologyProfile {
  std::int64_t euler = 0;
  int b0 = 0;
  int b1_mod2 = 0;

  friend bool operator==(HomologyProfile const&, HomologyProfile const&) = default;
};

// b0 and b1 over GF(2) from the stored 2-skeleton; euler from stored faces.
HomologyProfile homology_profile(SimplicialComplex const& c);

// Profile of L_{n,h}. Euler uses all dimensions; throws BudgetExceeded when
// the 2-skeleton has more than `max_faces` faces.
HomologyProfile link_homotopy_profile(int n, int h, std::uint64_t max_faces = 2'000'000);

}  // namespace houghton
