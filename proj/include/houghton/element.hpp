#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace houghton {

// The point at position `pos` on ray `ray` of Y_n; both coordinates 1-based.
struct Point {
  int ray = 1;
  int pos = 1;

  friend constexpr bool operator==(Point const&, Point const&) = default;
  friend constexpr auto operator<=>(Point const&, Point const&) = default;
};

std::ostream& operator<<(std::ostream& os, Point const& p);
std::string to_string(Point const& p);

// An injective eventual translation of Y_n. Maps act on the right, so the
// product a*b means "a, then b".
//
// Ray k is stored as a shift m_k plus a dense window of explicit images for
// positions 1..radius(k). The window ends at the last position whose image
// differs from the pure shift, which makes the representation canonical:
// structural equality is equality of maps.
class Element {
 public:
  using ExceptionTable = std::vector<std::pair<Point, Point>>;

  Element() = default;

  // The identity of M_n.
  explicit Element(int n);

  // Validating constructor. Entries of `exceptions` that agree with the pure
  // shift are dropped; anything non-injective or leaving Y_n throws
  // MalformedElement.
  Element(int n, std::vector<int> shifts, ExceptionTable const& exceptions);

  static Element identity(int n) { return Element(n); }

  // The element of T_n with exponent vector `exponents` (all entries >= 0).
  static Element translation(std::vector<int> const& exponents);

  // Assembles an element from explicit images of positions 1..images[k].size()
  // on each ray. The caller promises that the map is a pure shift past that
  // window. When `validate` is set the injectivity audit runs as well.
  static Element from_window(std::vector<int> shifts,
                             std::vector<std::vector<Point>> images,
                             bool validate);

  int rays() const noexcept { return static_cast<int>(shifts_.size()); }
  std::span<int const> shifts() const noexcept { return shifts_; }
  int shift(int ray) const;
  int radius(int ray) const;
  int max_radius() const noexcept;

  Point apply(Point p) const;
  Point operator()(Point p) const { return apply(p); }

  int height() const noexcept;
  bool is_identity() const noexcept;
  bool is_group_element() const noexcept { return height() == 0; }

  // Sorted by source point; no entry equals its pure-shift image.
  ExceptionTable exceptions() const;

  std::size_t hash() const noexcept;

  friend bool operator==(Element const&, Element const&) = default;
  friend auto operator<=>(Element const&, Element const&) = default;

 private:
  void normalize();
  void audit() const;

  std::vector<int> shifts_;
  std::vector<std::vector<Point>> window_;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const noexcept { return e.hash(); }
};

Element compose(Element const& a, Element const& b);
inline Element operator*(Element const& a, Element const& b) { return compose(a, b); }

// Throws NotGroupElement when h(e) > 0.
Element inverse(Element const& e);

std::vector<int> phi(Element const& e);
int height(Element const& e);

// S(e) = Y_n minus the image of e, sorted.
std::vector<Point> deficiency(Element const& e);

bool is_identity(Element const& e);

// Points moved by a finitary permutation (all shifts zero), sorted.
std::vector<Point> support(Element const& g);

// True iff e*g == e. Requires h(g) = 0.
bool stabilizer_check(Element const& e, Element const& g);

// The conjugate h^{-1} x h.
Element conjugate(Element const& x, Element const& h);

// Re-runs the injectivity and well-definedness audit; throws MalformedElement.
void audit(Element const& e);

std::string to_string(Element const& e);
std::ostream& operator<<(std::ostream& os, Element const& e);

}  // namespace houghton
