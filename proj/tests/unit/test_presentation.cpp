#include <doctest.h>

#include <algorithm>
#include <map>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/presentation.hpp"
#include "houghton/words.hpp"

using namespace houghton;

namespace {

std::map<std::string, int> family_counts(Presentation const& p) {
  std::map<std::string, int> out;
  for (auto const& r : p.relators) ++out[r.family];
  return out;
}

}  // namespace

TEST_CASE("chi labels the ball ray by ray") {
  CHECK(chi(3, 4, {1, 1}) == 1);
  CHECK(chi(3, 4, {2, 1}) == 5);
  CHECK(chi(3, 4, {3, 4}) == 12);
  CHECK_THROWS_AS(chi(3, 4, {1, 5}), IndexOutOfRange);
  CHECK_THROWS_AS(chi(3, 4, {4, 1}), IndexOutOfRange);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r)
      for (int label = 1; label <= n * r; ++label) CHECK(chi(n, r, chi_inverse(n, r, label)) == label);
}

TEST_CASE("chi_star transports permutations") {
  Element const s = make_transposition(1, {1, 4}, {1, 5});  // labels 4,5 in B_{2,4}
  CHECK(chi_star(2, 4, s) == make_transposition(2, {1, 4}, {2, 1}));
  CHECK_THROWS_AS(chi_star(2, 2, s), IndexOutOfRange);
  CHECK_THROWS_AS(chi_star(2, 4, make_g(2, 1)), MalformedElement);
}

TEST_CASE("Coxeter presentations") {
  Presentation const p3 = coxeter_presentation(3);
  CHECK(p3.generators.size() == 2);
  CHECK(p3.relators.size() == 3);
  CHECK(failing_relators(p3).empty());
  for (int m = 2; m <= 7; ++m) {
    Presentation const p = coxeter_presentation(m);
    auto const counts = family_counts(p);
    int const g = m - 1;
    CHECK(counts.at("involution") == g);
    CHECK((g >= 2 ? counts.at("braid") : 0) == std::max(g - 1, 0));
    int const comm = g >= 3 ? (g - 1) * (g - 2) / 2 : 0;
    CHECK((comm > 0 ? counts.at("commutation") : 0) == comm);
    CHECK(failing_relators(p).empty());
  }
  CHECK_THROWS_AS(coxeter_presentation(1), IndexOutOfRange);
}

TEST_CASE("symmetric presentation on the ball") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r) {
      Presentation const p = sigma_presentation(n, r);
      CHECK(static_cast<int>(p.generators.size()) == n * r - 1);
      CHECK(failing_relators(p).empty());
    }
  // n = 1 has no roots and matches the Coxeter presentation of S_r.
  Presentation const s = sigma_presentation(1, 5);
  Presentation const c = coxeter_presentation(5);
  CHECK(s.relators.size() == c.relators.size());
  for (std::size_t i = 0; i < s.generators.size(); ++i) CHECK(s.realization[i] == make_transposition(1, {1, static_cast<int>(i) + 1}, {1, static_cast<int>(i) + 2}));
  CHECK(name(SymGen{SymGen::Kind::Root, 3, 0}) == "a0^3");
  CHECK(name(SymGen{SymGen::Kind::RaySwap, 2, 1}) == "a^2_1");
}

TEST_CASE("ray-swap/root commutators are exactly the disjoint-support pairs") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 2; r <= 4; ++r) {
      Presentation const p = sigma_presentation(n, r);
      auto const gens = sigma_generators(n, r);
      std::size_t listed = 0, disjoint = 0;
      for (auto const& rel : p.relators) listed += rel.family == "R4";
      for (auto const& a : gens)
        for (auto const& b : gens) {
          if (a.kind != SymGen::Kind::RaySwap || b.kind != SymGen::Kind::Root) continue;
          auto const sa = support(realize(n, a)), sb = support(realize(n, b));
          bool meet = false;
          for (auto const& x : sa) meet = meet || std::find(sb.begin(), sb.end(), x) != sb.end();
          disjoint += !meet;
        }
      CHECK(listed == disjoint);
    }
}

TEST_CASE("realized generators generate the full symmetric group") {
  CHECK(verify_presentation_realizes_sym(2, 2).order == 24);
  CHECK(verify_presentation_realizes_sym(3, 2).order == 720);
  CHECK(verify_presentation_realizes_sym(1, 3).order == 6);
  CHECK(verify_presentation_realizes_sym(2, 2).ok());
  CHECK_THROWS_AS(verify_presentation_realizes_sym(3, 3), BudgetExceeded);
}

TEST_CASE("finite presentation of H_n") {
  for (int n = 3; n <= 6; ++n) {
    Presentation const p = houghton_relators(n);
    int const pairs = (n - 1) * (n - 2) / 2;
    auto const counts = family_counts(p);
    CHECK(counts.at("r1") == 1);
    CHECK(counts.at("r2") == 1);
    CHECK(counts.at("r3") == 1);
    CHECK(counts.at("r4") == pairs);
    CHECK(counts.at("r5") == pairs);
    CHECK(failing_relators(p).empty());
    CHECK(p.generators.size() == static_cast<std::size_t>(n));
  }
  CHECK(houghton_relators(3).relators.size() == 5);
  CHECK_THROWS_AS(houghton_relators(2), Unsupported);
  Presentation const p = houghton_relators(3);
  CHECK(p.tokens(p.relators[0]) == std::vector<std::string>{"a", "a"});
}

TEST_CASE("w_word") {
  CHECK(w_word(3) == std::vector<int>{1, 2, 3});
  CHECK(w_word(0).empty());
}
