#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "houghton/element.hpp"
#include "houghton/presentation.hpp"
#include "houghton/words.hpp"

namespace houghton {

// Relator counts outgrow 64 bits once commutations are expanded into H_n terms.
using BigCount = boost::multiprecision::cpp_int;

// A permutation of {0..m-1} as its image array; letters are sigma indices 1..m-1.
using Permutation = std::vector<int>;

struct InversionProfile {
  std::vector<int> r;  // r[i] = #{j > i : perm[i] > perm[j]}
  int length = 0;
};

InversionProfile coxeter_length(Permutation const& perm);

// Image array of a sigma word acting on the right of {0..m-1}.
Permutation evaluate_coxeter(std::vector<int> const& word, int m);

// Relator applications by class. Classes in use: "involution", "braid",
// "commutation" (symmetric-group level) and "exchange" (the commutator step of
// the canonical rewriting).
struct AreaTrace {
  std::map<std::string, std::uint64_t> counts;
  std::map<int, std::uint64_t> commutation_offsets;  // offset |a-b|-1 -> count

  void add(std::string const& cls, std::uint64_t k = 1);
  std::uint64_t total() const;
  AreaTrace& merge(AreaTrace const& other);

  friend bool operator==(AreaTrace const&, AreaTrace const&) = default;
};

struct Deletion {
  std::size_t i = 0;  // positions in the word at the time of deletion, i < j
  std::size_t j = 0;
  std::uint64_t charge = 0;
};

struct DeletionResult {
  std::vector<int> reduced;
  AreaTrace trace;
  std::vector<Deletion> deletions;
};

// Deletes the lexicographically smallest deletable pair until the word is
// reduced. The charge of a deletion counts the relators needed to slide the
// left letter's conjugate through the letters in between.
DeletionResult deletion_reduce(std::vector<int> word, int m);

// One transposition of Y_n, first < second.
using Swap = std::pair<Point, Point>;

struct SymRewrite {
  int n = 0;
  int x = 0;       // input length
  int radius = 0;  // ball radius actually used: max(x, largest position touched)
  std::vector<Swap> transpositions;  // product equals the input, left to right
  std::vector<int> coxeter_word;     // over sigma_1..sigma_{n*radius-1}
  std::vector<SymGen> symword;       // the same word over the ball generators
  AreaTrace trace;                   // "exchange" counts the rewrite gap
  std::size_t alpha_pushes = 0;
};

// Throws NotNullHomotopic unless the word evaluates to the identity. Every
// stage is checked against direct evaluation; a mismatch throws
// InvariantViolation.
SymRewrite rewrite_to_sym(Word const& w);

// u_k = alpha^{G_i^k} alpha^{G_j^k}, v_k = [alpha, alpha^{G_i^{k+1}}].
std::pair<Word, Word> uk_vk(int k, int n, int i, int j);

// Relator counts of the recursive fillings. v_0 is not null-homotopic, so
// A_v(0) is empty.
struct UkVkArea {
  BigCount u;
  std::optional<BigCount> v;
};

UkVkArea uk_vk_area(int k);

// Constants of the recursive filling, exposed for reports.
struct FillingCosts {
  static constexpr int kUkBase = 2;         // u_1: one r5 plus one r1
  static constexpr int kVkBase = 1;         // v_1 is r3
  static constexpr int kSwapStep = 2;       // one r4 and one r1 per level of u_k
  static constexpr int kConjugateStep = 4;  // one alpha-conjugate shift inside v_k
};

// A line y = slope * x + intercept fitted by least squares.
struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
  std::size_t points = 0;
};

LineFit fit_line(std::vector<double> const& xs, std::vector<double> const& ys);

// A(k+1) <= C * A(k) + D over the given sequence: C by least squares through
// the pairs, D the largest residual (never negative).
struct Envelope {
  double C = 0;
  double D = 0;
  bool holds = false;
};

Envelope geometric_envelope(std::vector<BigCount> const& seq);

struct DehnRow {
  int n = 0;
  int x = 0;
  int sample_id = 0;
  std::size_t len_symword = 0;
  std::uint64_t area_rewrite_gap = 0;
  std::uint64_t area_sym_reduction = 0;
  BigCount area_relator_expansion;
  BigCount area_total;
};

struct DehnConfig {
  int n = 3;
  int x_max = 10;
  int samples = 20;
  std::uint64_t seed = 1;
  std::size_t max_coxeter_letters = 400'000;  // per-sample budget
  int threads = 1;
};

struct SkippedSample {
  int x = 0;
  int sample_id = 0;
  std::string reason;
};

struct DehnReport {
  DehnConfig config;
  std::vector<DehnRow> rows;  // ordered by (x, sample_id)
  std::vector<SkippedSample> skipped;
  LineFit log_max_area;      // ln(max area_total) against x, x >= fit_from
  int fit_from = 4;
  double slope_cap = 0;      // declared ceiling for the fitted slope
};

// The full area of one null-homotopic word: rewrite gap plus the expansion of
// every symmetric-group relator used by deletion_reduce.
DehnRow dehn_area(Word const& w, std::size_t max_coxeter_letters = 400'000);

DehnReport dehn_experiment(DehnConfig const& config);

// "# seed=..." then the header then one line per row.
void write_csv(DehnReport const& report, std::ostream& os);

}  // namespace houghton
