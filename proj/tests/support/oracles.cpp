#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"

namespace oracle {

bool agrees_on_window(Element const& e, std::function<Point(Point)> const& f, int window) {
  for (int k = 1; k <= e.rays(); ++k)
    for (int p = 1; p <= window; ++p)
      if (e.apply({k, p}) != f({k, p})) return false;
  return true;
}

int window_for(std::vector<Element> const& es, int slack) {
  int w = 0;
  for (auto const& e : es) {
    for (auto const& [from, to] : e.exceptions()) w = std::max({w, from.pos, to.pos});
    for (int s : e.shifts()) w = std::max(w, std::abs(s));
  }
  int total = w;
  for (auto const& e : es)
    for (int s : e.shifts()) total += std::abs(s);
  return total + slack;
}

Element translate_left(std::vector<int> const& exps, Element const& a) {
  Element acc = Element::identity(a.rays());
  for (int i = 1; i <= a.rays(); ++i)
    for (int s = 0; s < exps[static_cast<std::size_t>(i - 1)]; ++s) acc = compose(acc, houghton::make_t(a.rays(), i));
  return compose(acc, a);
}

namespace {

void for_each_exponent(int n, int box, std::function<void(std::vector<int> const&)> const& f) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(e);
    int k = 0;
    while (k < n && e[static_cast<std::size_t>(k)] == box) e[static_cast<std::size_t>(k++)] = 0;
    if (k == n) return;
    ++e[static_cast<std::size_t>(k)];
  }
}

}  // namespace

namespace {

// Common upper bounds T^e a = T^f b with exponents in [0, box]^n.
std::vector<Element> common_upper_bounds(Element const& a, Element const& b, int box) {
  int const n = a.rays();
  std::set<Element> ups_a;
  for_each_exponent(n, box, [&](std::vector<int> const& e) { ups_a.insert(translate_left(e, a)); });
  std::vector<Element> common;
  for_each_exponent(n, box, [&](std::vector<int> const& f) {
    Element c = translate_left(f, b);
    if (ups_a.count(c)) common.push_back(std::move(c));
  });
  return common;
}

std::optional<Element> unique_lowest(std::vector<Element> const& common) {
  if (common.empty()) return std::nullopt;
  int low = common.front().height();
  for (auto const& c : common) low = std::min(low, c.height());
  std::vector<Element> best;
  for (auto const& c : common)
    if (c.height() == low && std::find(best.begin(), best.end(), c) == best.end()) best.push_back(c);
  if (best.size() != 1) return std::nullopt;
  return best.front();
}

}  // namespace

std::optional<Element> brute_lub(Element const& a, Element const& b, int box) {
  return unique_lowest(common_upper_bounds(a, b, box));
}

namespace {

std::vector<Element> one_step_down(Element const& x) {
  int const n = x.rays();
  std::vector<Element> out;
  if (x.height() == 0) return out;
  int const window = window_for({x}, 2);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> shifts(x.shifts().begin(), x.shifts().end());
    shifts[static_cast<std::size_t>(i - 1)] -= 1;
    for (int ray = 1; ray <= n; ++ray) {
      for (int pos = 1; pos <= window; ++pos) {
        // Candidate c: (i,1) -> (ray,pos), (i,p) -> x(i,p-1), identical to x elsewhere.
        houghton::Element::ExceptionTable table;
        for (int k = 1; k <= n; ++k)
          for (int p = 1; p <= window + 1; ++p) {
            Point const src{k, p};
            if (k != i) table.emplace_back(src, x.apply(src));
            else table.emplace_back(src, p == 1 ? Point{ray, pos} : x.apply({k, p - 1}));
          }
        try {
          Element c(n, shifts, table);
          if (compose(houghton::make_t(n, i), c) == x) out.push_back(std::move(c));
        } catch (houghton::MalformedElement const&) {
        }
      }
    }
  }
  return out;
}

}  // namespace

namespace {

using StepCache = std::map<Element, std::vector<Element>>;

std::vector<Element> down_set_cached(Element const& x, StepCache& cache) {
  std::set<Element> seen{x};
  std::deque<Element> queue{x};
  while (!queue.empty()) {
    Element const cur = queue.front();
    queue.pop_front();
    auto it = cache.find(cur);
    if (it == cache.end()) it = cache.emplace(cur, one_step_down(cur)).first;
    for (auto const& c : it->second)
      if (seen.insert(c).second) queue.push_back(c);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Element> brute_down_set(Element const& x) {
  StepCache cache;
  return down_set_cached(x, cache);
}

std::optional<Element> brute_glb(Element const& a, Element const& b) {
  StepCache cache;
  auto const da = down_set_cached(a, cache);
  auto const db = down_set_cached(b, cache);
  std::vector<Element> common;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
  for (auto const& g : common) {
    // Everything below g is a common lower bound; g is the glb when that is all of them.
    if (down_set_cached(g, cache).size() == common.size()) return g;
  }
  return std::nullopt;
}

std::map<std::vector<int>, int> symmetric_bfs(int m) {
  std::vector<int> id(static_cast<std::size_t>(m));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> dist{{id, 0}};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto const cur = queue.front();
    queue.pop_front();
    for (int s = 1; s < m; ++s) {
      auto next = cur;
      for (auto& v : next)
        if (v == s - 1) v = s;
        else if (v == s) v = s - 1;
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(next);
    }
  }
  return dist;
}

std::optional<Element> brute_lub_growing(Element const& a, Element const& b, int max_box) {
  for (int box = 0; box <= max_box; ++box) {
    auto const common = common_upper_bounds(a, b, box);
    if (!common.empty()) return unique_lowest(common);
  }
  return std::nullopt;
}

}  // namespace oracle
