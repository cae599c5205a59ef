#include "houghton/presentation.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_set>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/words.hpp"

namespace houghton {

int Presentation::generator_index(std::string const& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

std::vector<std::string> Presentation::tokens(Relator const& r) const {
  std::vector<std::string> out;
  out.reserve(r.letters.size());
  for (Symbol s : r.letters) out.push_back(s.inverse ? inverse_names[s.gen] : generators[s.gen]);
  return out;
}

Element realize(Presentation const& p, std::vector<Symbol> const& word) {
  if (p.realization.empty()) throw MalformedElement("presentation has no realization");
  Element acc = Element::identity(p.realization.front().rays());
  for (Symbol s : word) {
    Element const& x = p.realization.at(static_cast<std::size_t>(s.gen));
    acc = compose(acc, s.inverse ? inverse(x) : x);
  }
  return acc;
}

bool relator_holds(Presentation const& p, Relator const& r) { return realize(p, r.letters).is_identity(); }

std::vector<std::size_t> failing_relators(Presentation const& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (!relator_holds(p, p.relators[i])) out.push_back(i);
  return out;
}

namespace {

using Sym = std::vector<Symbol>;

Sym square(int a) { return {{a, false}, {a, false}}; }
Sym braid(int a, int b) {
  Sym out;
  for (int k = 0; k < 3; ++k) {
    out.push_back({a, false});
    out.push_back({b, false});
  }
  return out;
}
Sym commutator(int a, int b) { return {{a, false}, {b, false}, {a, true}, {b, true}}; }

}  // namespace

std::string name(SymGen const& s) {
  if (s.kind == SymGen::Kind::Root) return "a0^" + std::to_string(s.ray);
  return "a^" + std::to_string(s.ray) + "_" + std::to_string(s.pos);
}

Element realize(int n, SymGen const& s) {
  if (s.kind == SymGen::Kind::Root) return make_transposition(n, {1, 1}, {s.ray, 1});
  return make_transposition(n, {s.ray, s.pos}, {s.ray, s.pos + 1});
}

int chi(int n, int r, Point p) {
  if (p.ray < 1 || p.ray > n || p.pos < 1 || p.pos > r)
    throw IndexOutOfRange("point " + to_string(p) + " lies outside B_{" + std::to_string(n) + "," + std::to_string(r) + "}");
  return (p.ray - 1) * r + p.pos;
}

Point chi_inverse(int n, int r, int label) {
  if (label < 1 || label > n * r) throw IndexOutOfRange("label " + std::to_string(label) + " out of range");
  return {(label - 1) / r + 1, (label - 1) % r + 1};
}

Element chi_star(int n, int r, Element const& perm) {
  if (perm.rays() != 1 || perm.height() != 0) throw MalformedElement("chi_star expects a permutation in H_1");
  Element::ExceptionTable table;
  for (int x = 1; x <= n * r; ++x) {
    int const y = perm.apply({1, x}).pos;
    if (y > n * r) throw IndexOutOfRange("permutation moves " + std::to_string(x) + " outside 1.." + std::to_string(n * r));
    table.emplace_back(chi_inverse(n, r, x), chi_inverse(n, r, y));
  }
  for (auto const& [from, to] : perm.exceptions())
    if (from.pos > n * r) throw IndexOutOfRange("permutation is not supported on 1.." + std::to_string(n * r));
  return Element(n, std::vector<int>(static_cast<std::size_t>(n), 0), table);
}

std::vector<SymGen> sigma_generators(int n, int r) {
  if (n < 1 || r < 1) throw IndexOutOfRange("sigma_generators needs n, r >= 1");
  std::vector<SymGen> out;
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= r - 1; ++p) out.push_back({SymGen::Kind::RaySwap, i, p});
  for (int j = 2; j <= n; ++j) out.push_back({SymGen::Kind::Root, j, 0});
  return out;
}

Presentation coxeter_presentation(int m) {
  if (m < 2) throw IndexOutOfRange("coxeter_presentation needs m >= 2");
  Presentation p;
  for (int k = 1; k <= m - 1; ++k) {
    p.generators.push_back("s" + std::to_string(k));
    p.inverse_names.push_back("s" + std::to_string(k) + "^-1");
    p.realization.push_back(make_transposition(1, {1, k}, {1, k + 1}));
  }
  int const g = m - 1;
  for (int k = 0; k < g; ++k) p.relators.push_back({"involution", square(k)});
  for (int k = 0; k + 1 < g; ++k) p.relators.push_back({"braid", braid(k, k + 1)});
  for (int k = 0; k < g; ++k)
    for (int l = k + 2; l < g; ++l) p.relators.push_back({"commutation", commutator(k, l)});
  return p;
}

Presentation sigma_presentation(int n, int r) {
  auto const gens = sigma_generators(n, r);
  Presentation p;
  for (auto const& s : gens) {
    p.generators.push_back(name(s));
    p.inverse_names.push_back(name(s) + "^-1");
    p.realization.push_back(realize(n, s));
  }
  auto ray_swap = [&](int i, int q) { return (i - 1) * (r - 1) + (q - 1); };
  auto root = [&](int j) { return n * (r - 1) + (j - 2); };

  for (int g = 0; g < static_cast<int>(gens.size()); ++g) p.relators.push_back({"R1", square(g)});
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= r - 1; ++a)
      for (int b = a + 2; b <= r - 1; ++b) p.relators.push_back({"R2", commutator(ray_swap(i, a), ray_swap(i, b))});
  for (int i = 1; i <= n; ++i)
    for (int i2 = i + 1; i2 <= n; ++i2)
      for (int a = 1; a <= r - 1; ++a)
        for (int b = 1; b <= r - 1; ++b) p.relators.push_back({"R3", commutator(ray_swap(i, a), ray_swap(i2, b))});
  // A ray swap commutes with a root exactly when their supports are disjoint.
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a <= r - 1; ++a)
      for (int j = 2; j <= n; ++j) {
        bool const touches = a == 1 && (i == 1 || i == j);
        if (!touches) p.relators.push_back({"R4", commutator(ray_swap(i, a), root(j))});
      }
  for (int i = 1; i <= n; ++i)
    for (int a = 1; a + 1 <= r - 1; ++a) p.relators.push_back({"R5", braid(ray_swap(i, a), ray_swap(i, a + 1))});
  if (r >= 2) {
    for (int j = 2; j <= n; ++j) {
      p.relators.push_back({"R6", braid(ray_swap(1, 1), root(j))});
      p.relators.push_back({"R6", braid(ray_swap(j, 1), root(j))});
    }
  }
  return p;
}

namespace {

Sym to_symbols(Word const& w) {
  int const alpha = w.rays() - 1;
  Sym out;
  for (Letter x : w.letters()) {
    switch (x.kind) {
      case LetterKind::G: out.push_back({x.index - 1, false}); break;
      case LetterKind::GInv: out.push_back({x.index - 1, true}); break;
      case LetterKind::Alpha: out.push_back({alpha, false}); break;
      case LetterKind::AlphaInv: out.push_back({alpha, true}); break;
      case LetterKind::T: throw Unsupported("t letters cannot appear in a relator of H_n");
    }
  }
  return out;
}

}  // namespace

Presentation houghton_relators(int n) {
  if (n < 3) throw Unsupported("the finite presentation of H_n needs n >= 3");
  Presentation p;
  for (int i = 1; i <= n - 1; ++i) {
    p.generators.push_back(token(g_letter(i)));
    p.inverse_names.push_back(token(g_inv_letter(i)));
    p.realization.push_back(make_g(n, i));
  }
  p.generators.push_back(token(alpha_letter()));
  p.inverse_names.push_back(token(alpha_inv_letter()));
  p.realization.push_back(make_alpha(n));

  Word const a(n, {alpha_letter()});
  auto g = [n](int i, int e) { return letter_power(n, g_letter(i), e); };

  p.relators.push_back({"r1", to_symbols(a + a)});
  Word const pair = a + conjugate_word(a, g(1, 1));
  p.relators.push_back({"r2", to_symbols(pair + pair + pair)});
  p.relators.push_back({"r3", to_symbols(commutator_word(a, conjugate_word(a, g(1, -2))))});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      p.relators.push_back({"r4", to_symbols(commutator_word(g(i, 1), g(j, 1)) + inverse_word(a))});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      p.relators.push_back(
          {"r5", to_symbols(conjugate_word(a, g(i, -1)) + inverse_word(conjugate_word(a, g(j, -1))))});
  return p;
}

std::vector<int> w_word(int k) {
  if (k < 0) throw IndexOutOfRange("w_word needs k >= 0");
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[i] = i + 1;
  return out;
}

namespace {

using Perm = std::array<std::uint8_t, 8>;

std::uint32_t encode(Perm const& p, int m) {
  std::uint32_t code = 0;
  for (int i = 0; i < m; ++i) code |= static_cast<std::uint32_t>(p[i]) << (3 * i);
  return code;
}

}  // namespace

SymmetricReport verify_presentation_realizes_sym(int n, int r) {
  int const m = n * r;
  if (m > 8) throw BudgetExceeded("orbit enumeration is capped at nr <= 8, got nr = " + std::to_string(m));
  SymmetricReport report;
  report.n = n;
  report.r = r;
  report.expected_order = 1;
  for (int i = 2; i <= m; ++i) report.expected_order *= static_cast<std::uint64_t>(i);

  Presentation const p = sigma_presentation(n, r);
  report.relators = p.relators.size();
  report.failing = failing_relators(p);

  std::vector<Perm> gens;
  for (Element const& x : p.realization) {
    Perm perm{};
    for (int label = 1; label <= m; ++label) perm[label - 1] = static_cast<std::uint8_t>(chi(n, r, x.apply(chi_inverse(n, r, label))) - 1);
    gens.push_back(perm);
  }
  Perm id{};
  for (int i = 0; i < m; ++i) id[i] = static_cast<std::uint8_t>(i);
  std::unordered_set<std::uint32_t> seen{encode(id, m)};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm const cur = queue.front();
    queue.pop_front();
    for (Perm const& s : gens) {
      Perm next{};
      for (int i = 0; i < m; ++i) next[i] = s[cur[i]];
      if (seen.insert(encode(next, m)).second) queue.push_back(next);
    }
  }
  report.order = seen.size();
  return report;
}

}  // namespace houghton
