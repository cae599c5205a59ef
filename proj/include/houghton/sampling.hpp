#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/words.hpp"

namespace houghton {

// Deterministic across platforms: mt19937_64 plus explicit range reduction.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 over (seed, a, b); used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Uniform word over g_i^{+-1} (and alpha^{+-1} when n >= 3).
Word random_group_word(Rng& rng, int n, int length);

// A product of `length` random generators of H_n. For n = 1 the generators
// are transpositions of adjacent points among the first four; for n = 2 they
// are g_1^{+-1} and the transposition of (1,1), (2,1).
Element random_group_element(Rng& rng, int n, int length);

// t-letters and group generators shuffled together; exactly `height` t's.
Element random_monoid_element(Rng& rng, int n, int height, int scramble);

// A null-homotopic word of length at most max_length, drawn from three
// families: products of relator conjugates, u_k-type words, and commutators of
// two disjoint conjugates of alpha. Needs n >= 3.
Word random_null_homotopic_word(Rng& rng, int n, int max_length);

// A word over sigma_1..sigma_{m-1} evaluating to the identity of S_m.
std::vector<int> random_null_coxeter_word(Rng& rng, int m, int max_length);

}  // namespace houghton
