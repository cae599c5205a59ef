#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

struct Symbol {
  int gen = 0;  // index into Presentation::generators
  bool inverse = false;

  friend bool operator==(Symbol const&, Symbol const&) = default;
};

struct Relator {
  std::string family;
  std::vector<Symbol> letters;

  friend bool operator==(Relator const&, Relator const&) = default;
};

// Generators, relators, and a realization of each generator as an Element.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> inverse_names;
  std::vector<Relator> relators;
  std::vector<Element> realization;

  int generator_index(std::string const& name) const;  // -1 when absent
  std::vector<std::string> tokens(Relator const& r) const;
};

Element realize(Presentation const& p, std::vector<Symbol> const& word);
bool relator_holds(Presentation const& p, Relator const& r);

// Indices of relators that do not realize to the identity.
std::vector<std::size_t> failing_relators(Presentation const& p);

// Generators of the finite symmetric group on B_{n,r}.
struct SymGen {
  enum class Kind : std::uint8_t { RaySwap, Root };
  Kind kind = Kind::RaySwap;
  int ray = 1;  // RaySwap: the ray i. Root: the ray j >= 2 joined to (1,1).
  int pos = 1;  // RaySwap: swaps (i,pos) and (i,pos+1). Unused for Root.

  friend bool operator==(SymGen const&, SymGen const&) = default;
};

std::string name(SymGen const& s);
Element realize(int n, SymGen const& s);

// Position of p in the ray-major order of B_{n,r}, starting at 1.
int chi(int n, int r, Point p);
Point chi_inverse(int n, int r, int label);

// Transports a permutation of {1..nr}, given as an element of H_1 supported
// there, to the corresponding permutation of B_{n,r} inside H_n.
Element chi_star(int n, int r, Element const& perm);

// The generator sequence of the symmetric presentation: all RaySwap(i,p) in
// (i,p) order, then Root(2..n).
std::vector<SymGen> sigma_generators(int n, int r);

// Coxeter presentation of S_m, realized in H_1 by adjacent transpositions.
Presentation coxeter_presentation(int m);

Presentation sigma_presentation(int n, int r);

// The relators of the finite presentation of H_n, realized in H_n.
Presentation houghton_relators(int n);

// sigma indices 1..k.
std::vector<int> w_word(int k);

struct SymmetricReport {
  int n = 0;
  int r = 0;
  std::uint64_t order = 0;
  std::uint64_t expected_order = 0;
  std::size_t relators = 0;
  std::vector<std::size_t> failing;

  bool ok() const { return order == expected_order && failing.empty(); }
};

// Enumerates the group generated by the realized generators; nr <= 8.
SymmetricReport verify_presentation_realizes_sym(int n, int r);

}  // namespace houghton
