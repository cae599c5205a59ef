#include "houghton/element.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

void check_rays(int n) {
  if (n < 1) throw MalformedElement("ray count must be at least 1, got " + std::to_string(n));
}

std::string point_text(Point p) {
  return "(" + std::to_string(p.ray) + "," + std::to_string(p.pos) + ")";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Point const& p) { return os << point_text(p); }

std::string to_string(Point const& p) { return point_text(p); }

Element::Element(int n) : shifts_(static_cast<std::size_t>(n), 0), window_(static_cast<std::size_t>(n)) {
  check_rays(n);
}

Element::Element(int n, std::vector<int> shifts, ExceptionTable const& exceptions) {
  check_rays(n);
  if (static_cast<int>(shifts.size()) != n)
    throw MalformedElement("shift vector has " + std::to_string(shifts.size()) + " entries for n = " +
                           std::to_string(n));
  shifts_ = std::move(shifts);
  window_.assign(static_cast<std::size_t>(n), {});

  std::vector<int> reach(static_cast<std::size_t>(n), 0);
  for (auto const& [from, to] : exceptions) {
    if (from.ray < 1 || from.ray > n || from.pos < 1)
      throw MalformedElement("exception source " + point_text(from) + " is not a point of Y_" + std::to_string(n));
    reach[from.ray - 1] = std::max(reach[from.ray - 1], from.pos);
  }
  // Positions the shift would push below 1 must be covered explicitly.
  for (int k = 0; k < n; ++k) reach[k] = std::max(reach[k], -shifts_[k]);

  std::vector<std::vector<bool>> given(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    window_[k].resize(static_cast<std::size_t>(reach[k]));
    given[k].assign(static_cast<std::size_t>(reach[k]), false);
  }
  for (auto const& [from, to] : exceptions) {
    auto slot = given[from.ray - 1][from.pos - 1];
    if (slot) throw MalformedElement("duplicate exception source " + point_text(from));
    slot = true;
    window_[from.ray - 1][from.pos - 1] = to;
  }
  for (int k = 0; k < n; ++k) {
    for (int p = 1; p <= reach[k]; ++p) {
      if (given[k][p - 1]) continue;
      int const q = p + shifts_[k];
      if (q < 1)
        throw MalformedElement("point " + point_text({k + 1, p}) + " has no image: the shift leaves Y_n");
      window_[k][p - 1] = Point{k + 1, q};
    }
  }
  audit();
  normalize();
}

Element Element::translation(std::vector<int> const& exponents) {
  for (int e : exponents)
    if (e < 0) throw MalformedElement("translation exponents must be non-negative");
  Element t(static_cast<int>(exponents.size()));
  t.shifts_ = exponents;
  return t;
}

Element Element::from_window(std::vector<int> shifts, std::vector<std::vector<Point>> images, bool validate) {
  check_rays(static_cast<int>(shifts.size()));
  if (images.size() != shifts.size()) throw MalformedElement("window/shift size mismatch");
  Element e;
  e.shifts_ = std::move(shifts);
  e.window_ = std::move(images);
  if (validate) e.audit();
  e.normalize();
  return e;
}

int Element::shift(int ray) const {
  if (ray < 1 || ray > rays()) throw IndexOutOfRange("ray " + std::to_string(ray) + " out of range");
  return shifts_[ray - 1];
}

int Element::radius(int ray) const {
  if (ray < 1 || ray > rays()) throw IndexOutOfRange("ray " + std::to_string(ray) + " out of range");
  return static_cast<int>(window_[ray - 1].size());
}

int Element::max_radius() const noexcept {
  int r = 0;
  for (auto const& w : window_) r = std::max(r, static_cast<int>(w.size()));
  return r;
}

Point Element::apply(Point p) const {
  if (p.ray < 1 || p.ray > rays() || p.pos < 1)
    throw IndexOutOfRange("point " + point_text(p) + " is not in Y_" + std::to_string(rays()));
  auto const& w = window_[p.ray - 1];
  if (p.pos <= static_cast<int>(w.size())) return w[p.pos - 1];
  int const q = p.pos + shifts_[p.ray - 1];
  if (q < 1) throw MalformedElement("image of " + point_text(p) + " leaves Y_n");
  return {p.ray, q};
}

int Element::height() const noexcept { return std::accumulate(shifts_.begin(), shifts_.end(), 0); }

bool Element::is_identity() const noexcept {
  if (shifts_.empty()) return false;
  for (std::size_t k = 0; k < shifts_.size(); ++k)
    if (shifts_[k] != 0 || !window_[k].empty()) return false;
  return true;
}

Element::ExceptionTable Element::exceptions() const {
  ExceptionTable out;
  for (int k = 0; k < rays(); ++k) {
    for (int p = 1; p <= static_cast<int>(window_[k].size()); ++p) {
      Point const img = window_[k][p - 1];
      if (img != Point{k + 1, p + shifts_[k]}) out.emplace_back(Point{k + 1, p}, img);
    }
  }
  return out;
}

std::size_t Element::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int s : shifts_) mix(static_cast<std::size_t>(s));
  for (auto const& w : window_) {
    mix(w.size());
    for (Point const& p : w) mix(static_cast<std::size_t>(p.ray) * 1000003u + static_cast<std::size_t>(p.pos));
  }
  return h;
}

void Element::normalize() {
  for (int k = 0; k < rays(); ++k) {
    auto& w = window_[k];
    while (!w.empty()) {
      int const p = static_cast<int>(w.size());
      if (w.back() != Point{k + 1, p + shifts_[k]} || p + shifts_[k] < 1) break;
      w.pop_back();
    }
  }
}

void Element::audit() const {
  int const n = rays();
  std::vector<Point> images;
  for (int k = 0; k < n; ++k) {
    int const r = static_cast<int>(window_[k].size());
    if (r + shifts_[k] < 0)
      throw MalformedElement("ray " + std::to_string(k + 1) + " shift leaves Y_n past the window");
    for (Point const& img : window_[k]) {
      if (img.ray < 1 || img.ray > n || img.pos < 1)
        throw MalformedElement("image " + point_text(img) + " is not a point of Y_" + std::to_string(n));
      images.push_back(img);
    }
  }
  for (Point const& img : images) {
    int const tail_start = static_cast<int>(window_[img.ray - 1].size()) + shifts_[img.ray - 1];
    if (img.pos > tail_start)
      throw MalformedElement("image " + point_text(img) + " collides with a shifted tail");
  }
  std::sort(images.begin(), images.end());
  auto dup = std::adjacent_find(images.begin(), images.end());
  if (dup != images.end()) throw MalformedElement("two points share the image " + point_text(*dup));
}

Element compose(Element const& a, Element const& b) {
  int const n = a.rays();
  if (b.rays() != n) throw MalformedElement("compose: ray counts differ");
  std::vector<int> shifts(static_cast<std::size_t>(n));
  std::vector<std::vector<Point>> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int const sa = a.shift(k);
    shifts[k - 1] = sa + b.shift(k);
    // Beyond w, a is a pure shift landing beyond b's window.
    int const w = std::max({a.radius(k), b.radius(k) - sa, 0});
    auto& row = images[k - 1];
    row.reserve(static_cast<std::size_t>(w));
    for (int p = 1; p <= w; ++p) row.push_back(b.apply(a.apply({k, p})));
  }
  return Element::from_window(std::move(shifts), std::move(images), false);
}

Element inverse(Element const& e) {
  if (e.height() != 0)
    throw NotGroupElement("element of height " + std::to_string(e.height()) + " has no inverse");
  int const n = e.rays();
  std::vector<std::pair<Point, Point>> back;  // (image, source) over the window
  for (int k = 1; k <= n; ++k)
    for (int p = 1; p <= e.radius(k); ++p) back.emplace_back(e.apply({k, p}), Point{k, p});
  std::sort(back.begin(), back.end());

  std::vector<int> shifts(static_cast<std::size_t>(n));
  std::vector<std::vector<Point>> images(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int const m = e.shift(k);
    shifts[k - 1] = -m;
    int const w = std::max(0, e.radius(k) + m);
    for (int q = 1; q <= w; ++q) {
      Point const target{k, q};
      auto it = std::lower_bound(back.begin(), back.end(), std::make_pair(target, Point{0, 0}));
      if (it != back.end() && it->first == target) {
        images[k - 1].push_back(it->second);
      } else {
        // Only the pure tail can reach `target`.
        int const src = q - m;
        if (src <= e.radius(k) || src < 1)
          throw NotGroupElement("element is not surjective: " + to_string(target) + " has no preimage");
        images[k - 1].push_back({k, src});
      }
    }
  }
  return Element::from_window(std::move(shifts), std::move(images), false);
}

std::vector<int> phi(Element const& e) { return {e.shifts().begin(), e.shifts().end()}; }

int height(Element const& e) { return e.height(); }

std::vector<Point> deficiency(Element const& e) {
  int const n = e.rays();
  std::vector<std::vector<bool>> hit(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) hit[k - 1].assign(static_cast<std::size_t>(std::max(0, e.radius(k) + e.shift(k))), false);
  for (int k = 1; k <= n; ++k) {
    for (int p = 1; p <= e.radius(k); ++p) {
      Point const img = e.apply({k, p});
      auto& row = hit[img.ray - 1];
      if (img.pos <= static_cast<int>(row.size())) row[img.pos - 1] = true;
    }
  }
  std::vector<Point> out;
  for (int k = 1; k <= n; ++k)
    for (int q = 1; q <= static_cast<int>(hit[k - 1].size()); ++q)
      if (!hit[k - 1][q - 1]) out.push_back({k, q});
  return out;
}

bool is_identity(Element const& e) { return e.is_identity(); }

std::vector<Point> support(Element const& g) {
  for (int s : g.shifts())
    if (s != 0) throw Unsupported("support is infinite for an element with non-zero shifts");
  std::vector<Point> out;
  for (auto const& [from, to] : g.exceptions()) out.push_back(from);
  return out;
}

bool stabilizer_check(Element const& e, Element const& g) {
  if (g.height() != 0) throw NotGroupElement("stabilizer_check needs a group element");
  return compose(e, g) == e;
}

Element conjugate(Element const& x, Element const& h) { return compose(compose(inverse(h), x), h); }

void audit(Element const& e) {
  // Rebuild through the validating constructor and compare.
  Element rebuilt(e.rays(), phi(e), e.exceptions());
  if (!(rebuilt == e)) throw MalformedElement("element is not in canonical form");
}

std::string to_string(Element const& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Element const& e) {
  os << "{n=" << e.rays() << " shifts=[";
  for (int k = 0; k < e.rays(); ++k) os << (k ? "," : "") << e.shifts()[k];
  os << "] exceptions=[";
  bool first = true;
  for (auto const& [from, to] : e.exceptions()) {
    os << (first ? "" : " ") << from << "->" << to;
    first = false;
  }
  return os << "]}";
}

}  // namespace houghton
