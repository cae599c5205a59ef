#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

// Label of a maximal element a of a parent b: b = t_gen * a and (gen,1)a = miss.
struct MaxCoord {
  int gen = 1;
  Point miss;

  friend constexpr bool operator==(MaxCoord const&, MaxCoord const&) = default;
  friend constexpr auto operator<=>(MaxCoord const&, MaxCoord const&) = default;
};

// t * a for the translation t with exponent vector `exps`.
Element left_translate(std::vector<int> const& exps, Element const& a);

// The exponent vector of t with b = t * a, if any. Written a <= b.
std::optional<std::vector<int>> leq(Element const& a, Element const& b);

// lub(a, b) = T(left) * a = T(right) * b.
struct LubWitness {
  Element lub;
  std::vector<int> left;
  std::vector<int> right;
};

LubWitness lub_witness(Element const& a, Element const& b);
Element lub(Element const& a, Element const& b);

// Direct multi-element algorithm; throws on an empty list.
Element lub_many(std::span<Element const> elems);

std::optional<Element> glb(Element const& a, Element const& b);

// Folds glb over the list; none as soon as a pair has no lower bound.
std::optional<Element> glb_many(std::span<Element const> elems);

Element maximal_element(Element const& b, MaxCoord const& c);

// All n * h(b) maximal elements, ordered by (gen, miss).
std::vector<std::pair<MaxCoord, Element>> maximal_elements(Element const& b);

// Coordinate criterion: generators pairwise distinct and misses pairwise distinct.
bool cube_exists(std::span<MaxCoord const> coords);

// As above, after checking every miss lies in S(parent).
bool cube_exists(Element const& parent, std::span<MaxCoord const> coords);

int distance(Element const& a, Element const& b);

// m = t * g with t = t_1^{h(m)} and g in H_n.
struct TFactorization {
  std::vector<int> t;
  Element g;
};

TFactorization factor_TH(Element const& m);

}  // namespace houghton
