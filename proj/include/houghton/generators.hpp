#pragma once

#include "houghton/element.hpp"

namespace houghton {

// g_i for 1 <= i <= n-1: slides the line R_1 u R_{i+1} one step towards ray i+1.
Element make_g(int n, int i);

// t_i: translation by one on ray i.
Element make_t(int n, int i);

// The transposition of (1,1) and (1,2); needs n >= 3, where it equals [g_1, g_2].
Element make_alpha(int n);

// The transposition of (1,1) and (2,1); the second generator of H_2.
Element make_beta();

Element make_transposition(int n, Point p, Point q);

}  // namespace houghton
