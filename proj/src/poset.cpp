#include "houghton/poset.hpp"

#include <algorithm>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

void same_rays(Element const& a, Element const& b) {
  if (a.rays() != b.rays()) throw MalformedElement("elements live in different M_n");
}

// Whether t_ray^ka * a and t_ray^kb * b agree on ray `ray`.
bool agree_on_ray(Element const& a, int ka, Element const& b, int kb, int ray) {
  int const w = std::max({a.radius(ray) - ka, b.radius(ray) - kb, 0});
  for (int p = 1; p <= w; ++p)
    if (a.apply({ray, p + ka}) != b.apply({ray, p + kb})) return false;
  return true;
}

}  // namespace

Element left_translate(std::vector<int> const& exps, Element const& a) {
  return compose(Element::translation(exps), a);
}

std::optional<std::vector<int>> leq(Element const& a, Element const& b) {
  same_rays(a, b);
  std::vector<int> exps(static_cast<std::size_t>(a.rays()));
  for (int k = 1; k <= a.rays(); ++k) {
    exps[k - 1] = b.shift(k) - a.shift(k);
    if (exps[k - 1] < 0) return std::nullopt;
  }
  if (left_translate(exps, a) != b) return std::nullopt;
  return exps;
}

LubWitness lub_witness(Element const& a, Element const& b) {
  same_rays(a, b);
  int const n = a.rays();
  LubWitness out{Element(), std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    int const diff = b.shift(i) - a.shift(i);
    int kb = std::max(0, -diff);
    int ka = kb + diff;
    while (!agree_on_ray(a, ka, b, kb, i)) {
      ++ka;
      ++kb;
    }
    out.left[i - 1] = ka;
    out.right[i - 1] = kb;
  }
  out.lub = left_translate(out.left, a);
  if (left_translate(out.right, b) != out.lub) throw InvariantViolation("lub: the two translates disagree");
  return out;
}

Element lub(Element const& a, Element const& b) { return lub_witness(a, b).lub; }

Element lub_many(std::span<Element const> elems) {
  if (elems.empty()) throw MalformedElement("lub_many needs at least one element");
  int const n = elems.front().rays();
  for (auto const& e : elems) same_rays(elems.front(), e);
  std::vector<std::vector<int>> k(elems.size(), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    int top = elems.front().shift(i);
    for (auto const& e : elems) top = std::max(top, e.shift(i));
    for (std::size_t j = 0; j < elems.size(); ++j) k[j][i - 1] = top - elems[j].shift(i);
    for (;;) {
      bool all = true;
      for (std::size_t j = 1; j < elems.size() && all; ++j)
        all = agree_on_ray(elems[0], k[0][i - 1], elems[j], k[j][i - 1], i);
      if (all) break;
      for (auto& row : k) ++row[i - 1];
    }
  }
  Element const out = left_translate(k[0], elems[0]);
  for (std::size_t j = 1; j < elems.size(); ++j)
    if (left_translate(k[j], elems[j]) != out) throw InvariantViolation("lub_many: translates disagree");
  return out;
}

std::optional<Element> glb(Element const& a, Element const& b) {
  LubWitness const w = lub_witness(a, b);
  int const n = a.rays();
  for (int i = 0; i < n; ++i)
    if (w.left[i] != 0 && w.right[i] != 0) return std::nullopt;

  std::vector<Point> from_a, from_b;
  for (int i = 1; i <= n; ++i) {
    for (int p = 1; p <= w.left[i - 1]; ++p) from_a.push_back(a.apply({i, p}));
    for (int p = 1; p <= w.right[i - 1]; ++p) from_b.push_back(b.apply({i, p}));
  }
  std::sort(from_a.begin(), from_a.end());
  std::sort(from_b.begin(), from_b.end());
  std::vector<Point> common;
  std::set_intersection(from_a.begin(), from_a.end(), from_b.begin(), from_b.end(), std::back_inserter(common));
  if (!common.empty()) return std::nullopt;

  // On ray i take a where b needed no translation there, and b otherwise.
  std::vector<int> shifts(static_cast<std::size_t>(n));
  std::vector<std::vector<Point>> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Element const& src = w.right[i - 1] == 0 ? a : b;
    shifts[i - 1] = src.shift(i);
    for (int p = 1; p <= src.radius(i); ++p) images[i - 1].push_back(src.apply({i, p}));
  }
  Element g = Element::from_window(std::move(shifts), std::move(images), true);
  if (left_translate(w.right, g) != a || left_translate(w.left, g) != b)
    throw InvariantViolation("glb: construction does not sit below both elements");
  return g;
}

std::optional<Element> glb_many(std::span<Element const> elems) {
  if (elems.empty()) throw MalformedElement("glb_many needs at least one element");
  std::optional<Element> acc = elems.front();
  for (std::size_t j = 1; j < elems.size() && acc; ++j) acc = glb(*acc, elems[j]);
  return acc;
}

Element maximal_element(Element const& b, MaxCoord const& c) {
  int const n = b.rays();
  if (c.gen < 1 || c.gen > n) throw IndexOutOfRange("generator index out of range");
  auto const miss = deficiency(b);
  if (!std::binary_search(miss.begin(), miss.end(), c.miss))
    throw MalformedElement("label point " + to_string(c.miss) + " is not in S(b)");
  std::vector<int> shifts = phi(b);
  shifts[c.gen - 1] -= 1;
  std::vector<std::vector<Point>> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    if (j == c.gen) {
      images[j - 1].push_back(c.miss);
      for (int p = 2; p <= b.radius(j) + 1; ++p) images[j - 1].push_back(b.apply({j, p - 1}));
    } else {
      for (int p = 1; p <= b.radius(j); ++p) images[j - 1].push_back(b.apply({j, p}));
    }
  }
  return Element::from_window(std::move(shifts), std::move(images), false);
}

std::vector<std::pair<MaxCoord, Element>> maximal_elements(Element const& b) {
  std::vector<std::pair<MaxCoord, Element>> out;
  auto const miss = deficiency(b);
  for (int i = 1; i <= b.rays(); ++i)
    for (Point s : miss) {
      MaxCoord const c{i, s};
      out.emplace_back(c, maximal_element(b, c));
    }
  return out;
}

bool cube_exists(std::span<MaxCoord const> coords) {
  std::set<int> gens;
  std::set<Point> misses;
  for (auto const& c : coords) {
    if (!gens.insert(c.gen).second) return false;
    if (!misses.insert(c.miss).second) return false;
  }
  return true;
}

bool cube_exists(Element const& parent, std::span<MaxCoord const> coords) {
  auto const miss = deficiency(parent);
  for (auto const& c : coords)
    if (!std::binary_search(miss.begin(), miss.end(), c.miss))
      throw MalformedElement("coordinate " + to_string(c.miss) + " does not belong to this parent");
  return cube_exists(coords);
}

int distance(Element const& a, Element const& b) { return 2 * lub(a, b).height() - a.height() - b.height(); }

TFactorization factor_TH(Element const& m) {
  int const n = m.rays();
  int const h = m.height();
  auto const miss = deficiency(m);
  std::vector<int> shifts = phi(m);
  shifts[0] -= h;
  std::vector<std::vector<Point>> images(static_cast<std::size_t>(n));
  for (int p = 1; p <= h; ++p) images[0].push_back(miss[p - 1]);
  for (int p = h + 1; p <= m.radius(1) + h; ++p) images[0].push_back(m.apply({1, p - h}));
  for (int j = 2; j <= n; ++j)
    for (int p = 1; p <= m.radius(j); ++p) images[j - 1].push_back(m.apply({j, p}));
  TFactorization out{std::vector<int>(static_cast<std::size_t>(n), 0), Element::from_window(std::move(shifts), std::move(images), true)};
  out.t[0] = h;
  if (left_translate(out.t, out.g) != m) throw InvariantViolation("factor_TH: recomposition failed");
  return out;
}

}  // namespace houghton
