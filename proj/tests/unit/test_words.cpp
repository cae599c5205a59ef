#include <doctest.h>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/presentation.hpp"
#include "houghton/sampling.hpp"
#include "houghton/words.hpp"

using namespace houghton;

TEST_CASE("evaluation of small words") {
  CHECK(eval_word(parse_word("g1 g2 G1 G2", 3)) == make_alpha(3));
  CHECK(eval_word(parse_word("", 3)).is_identity());
  CHECK(eval_word(parse_word("g1 g2 G1 G2 A", 3)).is_identity());
  CHECK(eval_word(parse_word("t1 t1", 3, Alphabet::Monoid)).height() == 2);
  CHECK(eval_word(parse_word("t1 g1", 3, Alphabet::Mixed)) == make_t(3, 1) * make_g(3, 1));
  CHECK_FALSE(word_problem(parse_word("g1", 3)));
}

TEST_CASE("parser errors name the token") {
  CHECK_THROWS_WITH_AS(parse_word("g1 q7", 3), doctest::Contains("q7"), ParseError);
  CHECK_THROWS_WITH_AS(parse_word("g1 g3", 3), doctest::Contains("g3"), ParseError);
  CHECK_THROWS_AS(parse_word("t1", 3), ParseError);
  CHECK_THROWS_AS(parse_word("g1", 3, Alphabet::Monoid), ParseError);
  CHECK_THROWS_AS(parse_word("a", 2), ParseError);
  CHECK_THROWS_AS(inverse(t_letter(1)), Unsupported);
}

TEST_CASE("parse and print are inverse on canonical text") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = rng.uniform(2, 5);
    Word const w = random_group_word(rng, n, rng.uniform(0, 15));
    CHECK(parse_word(to_string(w), n) == w);
  }
  CHECK(to_string(parse_word("  g1\tG2  a A ", 3)) == "g1 G2 a A");
}

TEST_CASE("words are not reduced implicitly") {
  Word const w = parse_word("g1 G1 a a", 3);
  CHECK(w.size() == 4);
  CHECK(free_reduce(w).size() == 2);
  CHECK(free_reduce(parse_word("g1 g2 G2 G1", 3)).empty());
  CHECK(free_reduce(parse_word("a A g1", 3)) == parse_word("g1", 3));
}

TEST_CASE("property: formal inverse evaluates to the inverse") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = rng.uniform(3, 5);
    Word const w = random_group_word(rng, n, rng.uniform(0, 20));
    CHECK(eval_word(w + inverse_word(w)).is_identity());
    CHECK(word_problem(w + inverse_word(w)));
  }
}

TEST_CASE("commutators of distinct generators all equal alpha") {
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        if (i != j)
          CHECK(eval_word(commutator_word(Word(n, {g_letter(i)}), Word(n, {g_letter(j)}))) == make_alpha(n));
}

TEST_CASE("express round-trips") {
  CHECK(express(Element::identity(3)).empty());
  CHECK(eval_word(express(make_alpha(3))) == make_alpha(3));
  CHECK_THROWS_AS(express(make_g(2, 1)), Unsupported);
  CHECK_THROWS_AS(express(make_t(3, 1)), NotGroupElement);

  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    int const n = rng.uniform(3, 5);
    Element const g = eval_word(random_group_word(rng, n, 20));
    Word const w = express(g);
    CHECK(eval_word(w) == g);
  }
}

TEST_CASE("transposition conjugators") {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    int const n = rng.uniform(3, 4);
    Point const p{rng.uniform(1, n), rng.uniform(1, 5)};
    Point const q{rng.uniform(1, n), rng.uniform(1, 5)};
    if (p == q) continue;
    Word const h = transposition_conjugator(n, p, q);
    CHECK(eval_word(conjugate_word(Word(n, {alpha_letter()}), h)) == make_transposition(n, p, q));
  }
}

TEST_CASE("relator words and their conjugates are null-homotopic") {
  for (int n = 3; n <= 6; ++n) {
    Presentation const p = houghton_relators(n);
    CHECK(failing_relators(p).empty());
  }
  Rng rng(23);
  Word const r4 = parse_word("g1 g2 G1 G2 A", 3);
  for (int trial = 0; trial < 50; ++trial) {
    Word const u = random_group_word(rng, 3, rng.uniform(0, 8));
    CHECK(word_problem(conjugate_word(r4, u)));
  }
}

TEST_CASE("letter powers") {
  CHECK(letter_power(3, g_letter(2), 3) == parse_word("g2 g2 g2", 3));
  CHECK(letter_power(3, g_letter(1), -2) == parse_word("G1 G1", 3));
  CHECK(letter_power(3, g_letter(1), 0).empty());
}
