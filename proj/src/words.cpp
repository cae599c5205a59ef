#include "houghton/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"

namespace houghton {

Letter inverse(Letter x) {
  switch (x.kind) {
    case LetterKind::G: return g_inv_letter(x.index);
    case LetterKind::GInv: return g_letter(x.index);
    case LetterKind::Alpha: return alpha_inv_letter();
    case LetterKind::AlphaInv: return alpha_letter();
    case LetterKind::T: break;
  }
  throw Unsupported("t_" + std::to_string(x.index) + " has no inverse in M_n");
}

Word::Word(int n, std::vector<Letter> letters, Alphabet alphabet)
    : n_(n), alphabet_(alphabet), letters_(std::move(letters)) {
  if (n < 1) throw IndexOutOfRange("ray count must be at least 1");
  for (Letter x : letters_) check(x);
}

void Word::check(Letter x) const {
  bool const is_t = x.kind == LetterKind::T;
  if (is_t && alphabet_ == Alphabet::Group)
    throw ParseError("t letters are not allowed in a group word: " + token(x));
  if (!is_t && alphabet_ == Alphabet::Monoid)
    throw ParseError("group letters are not allowed in a monoid word: " + token(x));
  switch (x.kind) {
    case LetterKind::G:
    case LetterKind::GInv:
      if (x.index < 1 || x.index > n_ - 1)
        throw IndexOutOfRange("letter " + token(x) + " out of range for n = " + std::to_string(n_));
      break;
    case LetterKind::T:
      if (x.index < 1 || x.index > n_)
        throw IndexOutOfRange("letter " + token(x) + " out of range for n = " + std::to_string(n_));
      break;
    case LetterKind::Alpha:
    case LetterKind::AlphaInv:
      if (n_ < 3) throw Unsupported("alpha is a generator only for n >= 3");
      break;
  }
}

Word Word::operator+(Word const& other) const {
  Word out = *this;
  out += other;
  return out;
}

Word& Word::operator+=(Word const& other) {
  if (other.n_ != n_) throw IndexOutOfRange("cannot concatenate words over different n");
  if (other.alphabet_ != alphabet_) alphabet_ = Alphabet::Mixed;
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::push_back(Letter x) {
  check(x);
  letters_.push_back(x);
  return *this;
}

std::string token(Letter x) {
  switch (x.kind) {
    case LetterKind::G: return "g" + std::to_string(x.index);
    case LetterKind::GInv: return "G" + std::to_string(x.index);
    case LetterKind::Alpha: return "a";
    case LetterKind::AlphaInv: return "A";
    case LetterKind::T: return "t" + std::to_string(x.index);
  }
  return "?";
}

namespace {

Letter parse_token(std::string_view tok) {
  if (tok == "a") return alpha_letter();
  if (tok == "A") return alpha_inv_letter();
  if (tok.size() >= 2 && (tok[0] == 'g' || tok[0] == 'G' || tok[0] == 't')) {
    auto digits = tok.substr(1);
    bool ok = digits.size() <= 6 && digits[0] != '0' &&
              std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (ok) {
      int const i = std::stoi(std::string(digits));
      if (tok[0] == 'g') return g_letter(i);
      if (tok[0] == 'G') return g_inv_letter(i);
      return t_letter(i);
    }
  }
  throw ParseError("unrecognized token '" + std::string(tok) + "'");
}

}  // namespace

Word parse_word(std::string_view text, int n, Alphabet alphabet) {
  Word w(n, {}, alphabet);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto tok = text.substr(i, j - i);
      Letter const x = parse_token(tok);
      try {
        w.push_back(x);
      } catch (Error const& e) {
        throw ParseError("token '" + std::string(tok) + "': " + e.what());
      }
    }
    i = j;
  }
  return w;
}

std::string to_string(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += token(w[i]);
  }
  return out;
}

Element generator_element(int n, Letter x) {
  switch (x.kind) {
    case LetterKind::G: return make_g(n, x.index);
    case LetterKind::GInv: return inverse(make_g(n, x.index));
    case LetterKind::Alpha:
    case LetterKind::AlphaInv: return make_alpha(n);
    case LetterKind::T: return make_t(n, x.index);
  }
  throw ParseError("unknown letter");
}

Element eval_word(Word const& w) {
  int const n = w.rays();
  std::map<Letter, Element> cache;
  Element acc = Element::identity(n);
  for (Letter x : w.letters()) {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, generator_element(n, x)).first;
    acc = compose(acc, it->second);
  }
  return acc;
}

Word inverse_word(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(inverse(*it));
  return Word(w.rays(), std::move(out), w.alphabet());
}

Word free_reduce(Word const& w) {
  std::vector<Letter> stack;
  for (Letter x : w.letters()) {
    if (!stack.empty() && x.kind != LetterKind::T && stack.back().kind != LetterKind::T && stack.back() == inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(w.rays(), std::move(stack), w.alphabet());
}

Word conjugate_word(Word const& x, Word const& h) { return inverse_word(h) + x + h; }

Word commutator_word(Word const& a, Word const& b) { return a + b + inverse_word(a) + inverse_word(b); }

Word letter_power(int n, Letter x, int e) {
  Letter const y = e >= 0 ? x : inverse(x);
  return Word(n, std::vector<Letter>(static_cast<std::size_t>(e >= 0 ? e : -e), y));
}

namespace {

// A word c with alpha^c swapping (1,1) and `target`.
Word root_conjugator(int n, Point target) {
  if (target.ray == 1) {
    // g_1 G_2^{p-2} G_1 sends (1,1) to itself and (1,2) to (1,p).
    return letter_power(n, g_letter(1), 1) + letter_power(n, g_letter(2), -(target.pos - 2)) +
           letter_power(n, g_letter(1), -1);
  }
  // g_j g_i^q G_j fixes (1,1) and sends (1,2) to (i,q), where j names another ray.
  int const i = target.ray - 1;
  int const j = target.ray == 2 ? 2 : 1;
  return letter_power(n, g_letter(j), 1) + letter_power(n, g_letter(i), target.pos) + letter_power(n, g_letter(j), -1);
}

}  // namespace

Word transposition_conjugator(int n, Point p, Point q) {
  if (n < 3) throw Unsupported("transposition words need n >= 3");
  if (p == q) throw MalformedElement("transposition needs two distinct points");
  Point const root{1, 1};
  if (p == root) return root_conjugator(n, q);
  if (q == root) return root_conjugator(n, p);
  // Conjugating swap(root, p) by swap(root, q) gives swap(q, p).
  Word const cq = root_conjugator(n, q);
  Word const alpha(n, {alpha_letter()});
  return root_conjugator(n, p) + conjugate_word(alpha, cq);
}

Word express(Element const& g) {
  int const n = g.rays();
  if (n < 3) throw Unsupported("express needs n >= 3");
  if (g.height() != 0) throw NotGroupElement("express needs a group element");

  Word prefix(n);
  for (int i = 1; i <= n - 1; ++i) prefix += letter_power(n, g_letter(i), g.shift(i + 1));
  Element const rest = compose(inverse(eval_word(prefix)), g);

  // Cycles of the finitary remainder, each written as (x0 x1)(x0 x2)...(x0 x_{k-1}).
  Word out = prefix;
  Word const alpha(n, {alpha_letter()});
  std::set<Point> seen;
  for (Point const x0 : support(rest)) {
    if (seen.count(x0)) continue;
    seen.insert(x0);
    for (Point x = rest.apply(x0); x != x0; x = rest.apply(x)) {
      seen.insert(x);
      Word const piece = conjugate_word(alpha, transposition_conjugator(n, x0, x));
      if (eval_word(piece) != make_transposition(n, x0, x))
        throw InvariantViolation("conjugator for " + to_string(x0) + " <-> " + to_string(x) + " is wrong");
      out += piece;
    }
  }
  return out;
}

bool word_problem(Word const& w) { return eval_word(w).is_identity(); }

}  // namespace houghton
