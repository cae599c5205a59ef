#include "houghton/generators.hpp"

#include <string>

#include "houghton/errors.hpp"

namespace houghton {

Element make_g(int n, int i) {
  if (n < 2) throw IndexOutOfRange("g_i needs n >= 2");
  if (i < 1 || i > n - 1) throw IndexOutOfRange("g_" + std::to_string(i) + " out of range for n = " + std::to_string(n));
  std::vector<int> shifts(static_cast<std::size_t>(n), 0);
  shifts[0] = -1;
  shifts[i] = 1;
  return Element(n, std::move(shifts), {{{1, 1}, {i + 1, 1}}});
}

Element make_t(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("t_" + std::to_string(i) + " out of range for n = " + std::to_string(n));
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  exps[i - 1] = 1;
  return Element::translation(exps);
}

Element make_alpha(int n) {
  if (n < 3) throw Unsupported("alpha is a generator only for n >= 3");
  return make_transposition(n, {1, 1}, {1, 2});
}

Element make_beta() { return make_transposition(2, {1, 1}, {2, 1}); }

Element make_transposition(int n, Point p, Point q) {
  if (p == q) throw MalformedElement("transposition needs two distinct points");
  return Element(n, std::vector<int>(static_cast<std::size_t>(n), 0), {{p, q}, {q, p}});
}

}  // namespace houghton
