#include <doctest.h>

#include <functional>

#include "houghton/errors.hpp"
#include "houghton/link_complex.hpp"

using namespace houghton;

namespace {

// Brute force: a vertex set spans a simplex iff rows and columns are pairwise distinct.
std::size_t brute_simplices(int n, int h, int dim) {
  std::size_t count = 0;
  int const verts = n * h;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == dim + 1) {
      for (std::size_t i = 0; i < pick.size(); ++i)
        for (std::size_t j = i + 1; j < pick.size(); ++j)
          if (pick[i] / h == pick[j] / h || pick[i] % h == pick[j] % h) return;
      ++count;
      return;
    }
    for (int v = next; v < verts; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("grid numbering") {
  CHECK(grid_vertex(3, 1, 1) == 0);
  CHECK(grid_vertex(3, 2, 1) == 3);
  CHECK(grid_vertex(3, 2, 3) == 5);
}

TEST_CASE("face counts match brute-force enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int h = 0; h <= 4; ++h) {
      SimplicialComplex const c = link_complex(n, h);
      for (int d = 0; d <= c.max_dim(); ++d) {
        CHECK(c.count(d) == brute_simplices(n, h, d));
        CHECK(c.count(d) == link_face_count(n, h, d));
      }
    }
  // Edge count is C(n,2) h (h-1).
  CHECK(link_face_count(3, 4, 1) == 3 * 4 * 3);
  CHECK(link_face_count(2, 5, 2) == 0);
}

TEST_CASE("small links") {
  SimplicialComplex const l23 = link_complex(2, 3);
  CHECK(l23.vertex_count() == 6);
  CHECK(l23.count(1) == 6);
  // A 6-cycle: every vertex has degree 2 and the graph is connected.
  for (int v = 0; v < 6; ++v) {
    int deg = 0;
    for (auto const& e : l23.simplices(1)) deg += (e[0] == v || e[1] == v);
    CHECK(deg == 2);
  }
  CHECK(homology_profile(l23).b0 == 1);
  CHECK(homology_profile(l23).euler == 0);
  CHECK(link_complex(3, 0).vertex_count() == 0);
  CHECK_THROWS_AS(link_complex(0, 2), IndexOutOfRange);
}

TEST_CASE("flag condition") {
  CHECK(is_flag(link_complex(2, 2)));
  for (int n = 1; n <= 4; ++n)
    for (int h = 1; h <= 4; ++h) CHECK(is_flag(link_complex(n, h)));
  // A triangle graph whose 2-face is missing while dimension 2 is stored.
  SimplicialComplex hollow(3, 2);
  hollow.add({0, 1});
  hollow.add({1, 2});
  hollow.add({0, 2});
  CHECK_FALSE(is_flag(hollow));
  hollow.add({0, 1, 2});
  CHECK(is_flag(hollow));
  SimplicialComplex square(4, 2);
  for (Simplex e : {Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}, Simplex{0, 3}}) square.add(e);
  CHECK(is_flag(square));
}

TEST_CASE("simplicial complex bookkeeping") {
  SimplicialComplex c(4, 2);
  c.add({2, 0, 1});
  CHECK(c.contains({0, 1}));
  CHECK(c.contains({0, 1, 2}));
  CHECK_FALSE(c.contains({0, 3}));
  CHECK(c.count(1) == 3);
  CHECK_THROWS_AS(c.add({0, 0}), MalformedElement);
  CHECK_THROWS_AS(c.add({0, 9}), IndexOutOfRange);
  CHECK_THROWS_AS(c.simplices(3), IndexOutOfRange);
}

TEST_CASE("homotopy profiles") {
  for (int h = 1; h <= 6; ++h) CHECK(link_homotopy_profile(1, h).b0 == h);
  auto const p13 = link_homotopy_profile(1, 3);
  CHECK(p13.euler == 3);
  for (int h = 3; h <= 6; ++h) {
    auto const p = link_homotopy_profile(2, h);
    CHECK(p.b0 == 1);
    CHECK(p.euler == 1 - p.b1_mod2);
    CHECK(p.euler <= 0);
  }
  auto const p22 = link_homotopy_profile(2, 2);
  CHECK(p22.b0 == 2);  // two disjoint edges below the threshold h >= 2n - 1
  auto const p35 = link_homotopy_profile(3, 5);
  CHECK(p35.b0 == 1);
  CHECK(p35.b1_mod2 == 0);
  CHECK_THROWS_AS(link_homotopy_profile(4, 9, 100), BudgetExceeded);
}
