#include "houghton/sampling.hpp"

#include <algorithm>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/presentation.hpp"

namespace houghton {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw IndexOutOfRange("empty sampling range");
  auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

namespace {

Letter random_group_letter(Rng& rng, int n, bool with_alpha) {
  int const choices = 2 * (n - 1) + (with_alpha ? 2 : 0);
  int const c = rng.uniform(0, choices - 1);
  if (c < n - 1) return g_letter(c + 1);
  if (c < 2 * (n - 1)) return g_inv_letter(c - (n - 1) + 1);
  return c == 2 * (n - 1) ? alpha_letter() : alpha_inv_letter();
}

Word random_g_word(Rng& rng, int n, int length) {
  Word w(n);
  for (int k = 0; k < length; ++k) w.push_back(random_group_letter(rng, n, false));
  return w;
}

Word relator_word(int n, Relator const& r) {
  Word w(n);
  for (Symbol s : r.letters) {
    Letter x = s.gen < n - 1 ? g_letter(s.gen + 1) : alpha_letter();
    w.push_back(s.inverse ? inverse(x) : x);
  }
  return w;
}

Word alpha_conjugate(int n, Word const& by) { return conjugate_word(Word(n, {alpha_letter()}), by); }

Word relator_product(Rng& rng, int n, int max_length) {
  Presentation const p = houghton_relators(n);
  std::vector<Word> relators;
  for (auto const& r : p.relators) relators.push_back(relator_word(n, r));
  Word out(n);
  for (;;) {
    int const room = max_length - static_cast<int>(out.size());
    std::vector<std::size_t> fits;
    for (std::size_t i = 0; i < relators.size(); ++i)
      if (static_cast<int>(relators[i].size()) <= room) fits.push_back(i);
    if (fits.empty()) break;
    Word r = relators[fits[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(fits.size()) - 1))]];
    if (rng.coin()) r = inverse_word(r);
    int const spare = (room - static_cast<int>(r.size())) / 2;
    Word const u = random_g_word(rng, n, rng.uniform(0, std::min(spare, 3)));
    out += conjugate_word(r, u);
    if (rng.uniform(0, 2) == 0) break;
  }
  return free_reduce(out);
}

}  // namespace

Word random_group_word(Rng& rng, int n, int length) {
  if (n < 2) throw Unsupported("group words need n >= 2");
  Word w(n);
  for (int k = 0; k < length; ++k) w.push_back(random_group_letter(rng, n, n >= 3));
  return w;
}

Element random_group_element(Rng& rng, int n, int length) {
  if (n < 1) throw IndexOutOfRange("n must be >= 1");
  Element acc = Element::identity(n);
  for (int k = 0; k < length; ++k) {
    if (n == 1) {
      int const p = rng.uniform(1, 3);
      acc = compose(acc, make_transposition(1, {1, p}, {1, p + 1}));
    } else if (n == 2) {
      int const c = rng.uniform(0, 2);
      Element const g = make_g(2, 1);
      acc = compose(acc, c == 0 ? g : c == 1 ? inverse(g) : make_beta());
    } else {
      acc = compose(acc, generator_element(n, random_group_letter(rng, n, true)));
    }
  }
  return acc;
}

Element random_monoid_element(Rng& rng, int n, int height, int scramble) {
  if (height < 0 || scramble < 0) throw IndexOutOfRange("height and scramble must be >= 0");
  int ts = height;
  int gs = scramble;
  Element acc = Element::identity(n);
  while (ts + gs > 0) {
    if (rng.uniform(1, ts + gs) <= ts) {
      acc = compose(acc, make_t(n, rng.uniform(1, n)));
      --ts;
    } else {
      acc = compose(acc, random_group_element(rng, n, 1));
      --gs;
    }
  }
  return acc;
}

Word random_null_homotopic_word(Rng& rng, int n, int max_length) {
  if (n < 3) throw Unsupported("null-homotopic sampling needs n >= 3");
  if (max_length < 2) return Word(n);
  Word out(n);
  switch (rng.uniform(0, 2)) {
    case 1: {
      // alpha^{G_i^k} alpha^{G_j^k}, length 4k + 2.
      int const kmax = (max_length - 2) / 4;
      int const k = rng.uniform(0, kmax);
      int const i = rng.uniform(1, n - 2);
      int const j = rng.uniform(i + 1, n - 1);
      out = alpha_conjugate(n, letter_power(n, g_letter(i), -k)) + alpha_conjugate(n, letter_power(n, g_letter(j), -k));
      break;
    }
    case 2: {
      // [alpha^c1, alpha^c2] with disjoint supports, length 4(|c1| + |c2| + 1).
      int const budget = max_length / 4 - 1;
      for (int attempt = 0; attempt < 8 && budget >= 1; ++attempt) {
        int const l1 = rng.uniform(0, budget);
        int const l2 = rng.uniform(0, budget - l1);
        Word const c = commutator_word(alpha_conjugate(n, random_g_word(rng, n, l1)),
                                       alpha_conjugate(n, random_g_word(rng, n, l2)));
        if (word_problem(c)) {
          out = c;
          break;
        }
      }
      if (out.empty()) out = relator_product(rng, n, max_length);
      break;
    }
    default:
      out = relator_product(rng, n, max_length);
  }
  if (!word_problem(out)) throw InvariantViolation("sampled word is not null-homotopic: " + to_string(out));
  return out;
}

std::vector<int> random_null_coxeter_word(Rng& rng, int m, int max_length) {
  if (m < 2) throw IndexOutOfRange("Coxeter words need m >= 2");
  std::vector<int> out;
  int const half = max_length / 2;
  int const len = rng.uniform(0, half);
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int k = 0; k < len; ++k) {
    int const s = rng.uniform(1, m - 1);
    out.push_back(s);
    // Right action: the letter acts after the prefix, i.e. on values.
    for (auto& v : perm)
      if (v == s - 1) v = s;
      else if (v == s) v = s - 1;
  }
  // Undo with a random reduced word: strip a random right descent each time.
  std::vector<int> tail;
  for (;;) {
    std::vector<int> descents;
    std::vector<int> pos(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    for (int s = 1; s < m; ++s)
      if (pos[static_cast<std::size_t>(s - 1)] > pos[static_cast<std::size_t>(s)]) descents.push_back(s);
    if (descents.empty()) break;
    int const s = descents[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(descents.size()) - 1))];
    tail.push_back(s);
    for (auto& v : perm)
      if (v == s - 1) v = s;
      else if (v == s) v = s - 1;
  }
  out.insert(out.end(), tail.begin(), tail.end());
  // Occasional s s insertions keep the family from being reduced-by-construction.
  while (static_cast<int>(out.size()) + 2 <= max_length && rng.uniform(0, 3) == 0) {
    int const at = rng.uniform(0, static_cast<int>(out.size()));
    int const s = rng.uniform(1, m - 1);
    out.insert(out.begin() + at, {s, s});
  }
  return out;
}

}  // namespace houghton
