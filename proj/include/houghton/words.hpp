#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

enum class LetterKind : std::uint8_t { G, GInv, Alpha, AlphaInv, T };

struct Letter {
  LetterKind kind = LetterKind::Alpha;
  int index = 0;  // 1-based for G, GInv and T; unused otherwise

  friend constexpr bool operator==(Letter const&, Letter const&) = default;
  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
};

constexpr Letter g_letter(int i) { return {LetterKind::G, i}; }
constexpr Letter g_inv_letter(int i) { return {LetterKind::GInv, i}; }
constexpr Letter alpha_letter() { return {LetterKind::Alpha, 0}; }
constexpr Letter alpha_inv_letter() { return {LetterKind::AlphaInv, 0}; }
constexpr Letter t_letter(int i) { return {LetterKind::T, i}; }

// Throws Unsupported for T letters, which have no inverse in M_n.
Letter inverse(Letter x);

// Which letters a word may contain.
enum class Alphabet : std::uint8_t {
  Group,   // g_i, g_i^-1, alpha, alpha^-1
  Monoid,  // t_i only
  Mixed,   // both, explicitly flagged
};

class Word {
 public:
  Word() = default;
  explicit Word(int n, std::vector<Letter> letters = {}, Alphabet alphabet = Alphabet::Group);

  int rays() const noexcept { return n_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word operator+(Word const& other) const;
  Word& operator+=(Word const& other);
  Word& push_back(Letter x);

  friend bool operator==(Word const&, Word const&) = default;

 private:
  void check(Letter x) const;

  int n_ = 0;
  Alphabet alphabet_ = Alphabet::Group;
  std::vector<Letter> letters_;
};

// Tokens: g<i>, G<i> (inverse), a, A (inverse), t<i>; separated by whitespace.
Word parse_word(std::string_view text, int n, Alphabet alphabet = Alphabet::Group);
std::string to_string(Word const& w);
std::string token(Letter x);

Element generator_element(int n, Letter x);
Element eval_word(Word const& w);

// Formal inverse: reversed, each letter inverted. Group words only.
Word inverse_word(Word const& w);

// Repeatedly cancels adjacent x x^-1 pairs.
Word free_reduce(Word const& w);

// The word h^-1 x h.
Word conjugate_word(Word const& x, Word const& h);

// [a, b] = a b a^-1 b^-1.
Word commutator_word(Word const& a, Word const& b);

// x^e for a group letter; negative e uses the inverse letter.
Word letter_power(int n, Letter x, int e);

// A word over {g_i, alpha}^{+-1} evaluating to g. Needs n >= 3 and h(g) = 0.
Word express(Element const& g);

// A word whose conjugate of alpha is the transposition swapping p and q.
Word transposition_conjugator(int n, Point p, Point q);

bool word_problem(Word const& w);

}  // namespace houghton
