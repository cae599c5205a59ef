#include "houghton/dehn.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/sampling.hpp"

namespace houghton {

InversionProfile coxeter_length(Permutation const& perm) {
  int const m = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) throw MalformedElement("not a permutation of 0..m-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
  InversionProfile out;
  out.r.assign(perm.size(), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++out.r[static_cast<std::size_t>(i)];
  out.length = std::accumulate(out.r.begin(), out.r.end(), 0);
  return out;
}

Permutation evaluate_coxeter(std::vector<int> const& word, int m) {
  Permutation perm(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(perm.begin(), perm.end(), 0);
  for (int s : word) {
    if (s < 1 || s >= m) throw IndexOutOfRange("sigma_" + std::to_string(s) + " outside S_" + std::to_string(m));
    for (auto& v : perm)
      if (v == s - 1) v = s;
      else if (v == s) v = s - 1;
  }
  return perm;
}

void AreaTrace::add(std::string const& cls, std::uint64_t k) { counts[cls] += k; }

std::uint64_t AreaTrace::total() const {
  std::uint64_t t = 0;
  for (auto const& [cls, c] : counts) t += c;
  return t;
}

AreaTrace& AreaTrace::merge(AreaTrace const& other) {
  for (auto const& [cls, c] : other.counts) counts[cls] += c;
  for (auto const& [k, c] : other.commutation_offsets) commutation_offsets[k] += c;
  return *this;
}

namespace {

// Charges for sliding the transposition (p q), written as the palindrome
// sigma_p ... sigma_{q-1} ... sigma_p, across one letter sigma_c. Commutation
// offsets accumulate in a difference array.
class SlideCharges {
 public:
  explicit SlideCharges(int m) : diff_(static_cast<std::size_t>(std::max(m, 2) + 1), 0) {}

  std::uint64_t involutions = 0;
  std::uint64_t braids = 0;
  std::uint64_t commutations = 0;

  // sigma_c against every sigma_e, e in [lo, hi], `mult` times each.
  void commute(int c, int lo, int hi, std::uint64_t mult) {
    if (lo > hi) return;
    int const k_lo = c < lo ? lo - c - 1 : c - hi - 1;
    int const k_hi = c < lo ? hi - c - 1 : c - lo - 1;
    diff_[static_cast<std::size_t>(k_lo)] += static_cast<std::int64_t>(mult);
    diff_[static_cast<std::size_t>(k_hi) + 1] -= static_cast<std::int64_t>(mult);
    commutations += mult * static_cast<std::uint64_t>(hi - lo + 1);
  }

  // Returns the new (p, q) after conjugating by sigma_c.
  std::pair<int, int> slide(int p, int q, int c) {
    if (c <= p - 2 || c >= q + 1) {
      commute(c, p, q - 2, 2);
      commute(c, q - 1, q - 1, 1);
      return {p, q};
    }
    if (c == p - 1) {
      ++involutions;
      return {p - 1, q};
    }
    if (c == p) {
      ++involutions;
      return {p + 1, q};
    }
    if (c == q - 1) {
      commute(c, p, q - 3, 2);
      ++braids;
      ++involutions;
      return {p, q - 1};
    }
    if (c == q) {
      commute(c, p, q - 2, 2);
      ++braids;
      ++involutions;
      return {p, q + 1};
    }
    // p < c < q - 1: the letter passes through the middle of the palindrome.
    commute(c, p, c - 2, 2);
    commute(c - 1, c + 1, q - 2, 2);
    commute(c - 1, q - 1, q - 1, 1);
    braids += 2;
    return {p, q};
  }

  std::uint64_t ops() const { return involutions + braids + commutations; }

  void flush(AreaTrace& trace) const {
    trace.add("involution", involutions);
    trace.add("braid", braids);
    trace.add("commutation", commutations);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < diff_.size(); ++k) {
      run += diff_[k];
      if (run != 0) trace.commutation_offsets[static_cast<int>(k)] += static_cast<std::uint64_t>(run);
    }
  }

 private:
  std::vector<std::int64_t> diff_;
};

}  // namespace

DeletionResult deletion_reduce(std::vector<int> word, int m) {
  for (int s : word)
    if (s < 1 || s >= m) throw IndexOutOfRange("sigma_" + std::to_string(s) + " outside S_" + std::to_string(m));
  DeletionResult out;
  SlideCharges charges(m);
  for (;;) {
    bool found = false;
    for (std::size_t i = 0; i < word.size() && !found; ++i) {
      int p = word[i];
      int q = word[i] + 1;
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        int const c = word[j];
        if (c == p && q == p + 1) {
          // Replay the slide from i to j, now charging.
          std::uint64_t const before = charges.ops();
          int pp = word[i];
          int qq = pp + 1;
          for (std::size_t t = i + 1; t < j; ++t) std::tie(pp, qq) = charges.slide(pp, qq, word[t]);
          ++charges.involutions;  // the final s s cancellation
          out.deletions.push_back({i, j, charges.ops() - before});
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
          found = true;
          break;
        }
        // Conjugate (p q) by sigma_c.
        auto move = [c](int v) { return v == c ? c + 1 : v == c + 1 ? c : v; };
        int const a = move(p);
        int const b = move(q);
        p = std::min(a, b);
        q = std::max(a, b);
      }
    }
    if (!found) break;
  }
  charges.flush(out.trace);
  out.reduced = std::move(word);
  return out;
}

namespace {

Element g_power_product(int n, std::vector<int> const& exps, int upto_block, int partial) {
  // g_1^{e_1} ... g_{upto_block-1}^{e_{upto_block-1}} g_{upto_block}^{partial}
  Element acc = Element::identity(n);
  for (int j = 1; j < upto_block; ++j) {
    int const e = exps[static_cast<std::size_t>(j)];
    Element const g = e > 0 ? make_g(n, j) : inverse(make_g(n, j));
    for (int s = 0; s < std::abs(e); ++s) acc = compose(acc, g);
  }
  if (upto_block <= n - 1 && partial != 0) {
    Element const g = partial > 0 ? make_g(n, upto_block) : inverse(make_g(n, upto_block));
    for (int s = 0; s < std::abs(partial); ++s) acc = compose(acc, g);
  }
  return acc;
}

Swap as_swap(Element const& t) {
  auto const pts = support(t);
  if (pts.size() != 2 || t.apply(pts[0]) != pts[1] || t.apply(pts[1]) != pts[0])
    throw InvariantViolation("expected a transposition, got " + to_string(t));
  return {std::min(pts[0], pts[1]), std::max(pts[0], pts[1])};
}

Swap ordered(Point a, Point b) { return a < b ? Swap{a, b} : Swap{b, a}; }

// Edge path in the tree B_{n,r} from chi^-1(k) to chi^-1(k+1), as generators.
std::vector<SymGen> tree_path(int n, int r, int k) {
  Point const a = chi_inverse(n, r, k);
  Point const b = chi_inverse(n, r, k + 1);
  if (a.ray == b.ray) return {{SymGen::Kind::RaySwap, a.ray, a.pos}};
  std::vector<SymGen> path;
  for (int p = r - 1; p >= 1; --p) path.push_back({SymGen::Kind::RaySwap, a.ray, p});
  if (a.ray != 1) path.push_back({SymGen::Kind::Root, a.ray, 0});
  path.push_back({SymGen::Kind::Root, b.ray, 0});
  return path;
}

template <class T>
void append_palindrome(std::vector<T>& out, std::vector<T> const& path) {
  out.insert(out.end(), path.begin(), path.end());
  for (std::size_t s = path.size() - 1; s-- > 0;) out.push_back(path[s]);
}

}  // namespace

SymRewrite rewrite_to_sym(Word const& w) {
  int const n = w.rays();
  if (n < 3) throw Unsupported("rewriting to symmetric words needs n >= 3");
  if (w.alphabet() != Alphabet::Group) throw NotNullHomotopic("only group words can be null-homotopic");
  if (!word_problem(w)) throw NotNullHomotopic("word does not evaluate to the identity: " + to_string(w));

  SymRewrite out;
  out.n = n;
  out.x = static_cast<int>(w.size());

  std::vector<int> exps(static_cast<std::size_t>(n), 0);  // exps[j] for g_j, j = 1..n-1
  Element prefix = Element::identity(n);
  Element f_product = Element::identity(n);
  std::map<std::tuple<int, int, int, int>, Swap> exchange_cache;

  for (Letter letter : w.letters()) {
    prefix = compose(prefix, generator_element(n, letter));
    if (letter.kind == LetterKind::Alpha || letter.kind == LetterKind::AlphaInv) {
      // N alpha = alpha^{N^-1} N.
      Element const nbar = inverse(g_power_product(n, exps, n, 0));
      Swap const s = ordered(nbar.apply({1, 1}), nbar.apply({1, 2}));
      out.transpositions.push_back(s);
      f_product = compose(f_product, make_transposition(n, s.first, s.second));
      ++out.alpha_pushes;
    } else {
      int const i = letter.index;
      int const d = letter.kind == LetterKind::G ? 1 : -1;
      for (int j = n - 1; j > i; --j) {
        int const a = exps[static_cast<std::size_t>(j)];
        int const e = a > 0 ? 1 : -1;
        for (int s = 0; s < std::abs(a); ++s) {
          // g_j^e g_i^d = c g_i^d g_j^e with c = g_j^e g_i^d g_j^-e g_i^-d.
          auto key = std::make_tuple(j, e, i, d);
          auto it = exchange_cache.find(key);
          if (it == exchange_cache.end()) {
            Word const cw = commutator_word(letter_power(n, g_letter(j), e), letter_power(n, g_letter(i), d));
            it = exchange_cache.emplace(key, as_swap(eval_word(cw))).first;
          }
          Element const lbar = inverse(g_power_product(n, exps, j, e * (std::abs(a) - 1 - s)));
          Swap const moved = ordered(lbar.apply(it->second.first), lbar.apply(it->second.second));
          out.transpositions.push_back(moved);
          f_product = compose(f_product, make_transposition(n, moved.first, moved.second));
          out.trace.add("exchange");
        }
      }
      exps[static_cast<std::size_t>(i)] += d;
    }
    if (compose(f_product, g_power_product(n, exps, n, 0)) != prefix)
      throw InvariantViolation("canonical rewriting lost track of the prefix of " + to_string(w));
  }
  for (int j = 1; j <= n - 1; ++j)
    if (exps[static_cast<std::size_t>(j)] != 0) throw InvariantViolation("normal form of a null word is not trivial");

  std::size_t const xx = static_cast<std::size_t>(out.x) * static_cast<std::size_t>(out.x);
  if (out.transpositions.size() > xx)
    throw InvariantViolation("rewriting produced " + std::to_string(out.transpositions.size()) +
                             " transpositions for a word of length " + std::to_string(out.x));

  int r = out.x;
  for (auto const& [a, b] : out.transpositions) r = std::max({r, a.pos, b.pos});
  out.radius = r;
  for (auto const& [a, b] : out.transpositions) {
    int const la = chi(n, r, a);
    int const lb = chi(n, r, b);
    std::vector<int> chain;
    for (int k = la; k < lb; ++k) chain.push_back(k);
    std::size_t const first_letter = out.symword.size();
    std::vector<int> cox;
    append_palindrome(cox, chain);
    for (int k : cox) {
      std::vector<SymGen> path = tree_path(n, r, k);
      append_palindrome(out.symword, path);
    }
    out.coxeter_word.insert(out.coxeter_word.end(), cox.begin(), cox.end());
    Element piece = Element::identity(n);
    for (std::size_t s = first_letter; s < out.symword.size(); ++s) piece = compose(piece, realize(n, out.symword[s]));
    if (piece != make_transposition(n, a, b))
      throw InvariantViolation("ball word for the swap of " + to_string(a) + " and " + to_string(b) + " is wrong");
  }
  return out;
}

std::pair<Word, Word> uk_vk(int k, int n, int i, int j) {
  if (n < 3) throw Unsupported("u_k and v_k need n >= 3");
  if (k < 0 || i < 1 || j <= i || j > n - 1)
    throw IndexOutOfRange("u_k, v_k need k >= 0 and 1 <= i < j <= n-1");
  Word const a(n, {alpha_letter()});
  Word const u = conjugate_word(a, letter_power(n, g_letter(i), -k)) + conjugate_word(a, letter_power(n, g_letter(j), -k));
  Word const v = commutator_word(a, conjugate_word(a, letter_power(n, g_letter(i), -(k + 1))));
  return {u, v};
}

UkVkArea uk_vk_area(int k) {
  if (k < 0) throw IndexOutOfRange("k must be >= 0");
  using C = FillingCosts;
  std::vector<BigCount> au{1, C::kUkBase};
  std::vector<BigCount> av{0, C::kVkBase};
  for (int s = 2; s <= k; ++s) {
    auto const t = static_cast<std::size_t>(s);
    au.push_back(av[t - 1] + 2 * au[t - 1] + au[t - 2] + C::kSwapStep);
    av.push_back(2 * au[t - 1] + 2 * (s - 1) * C::kConjugateStep + 1);
  }
  auto const kk = static_cast<std::size_t>(k);
  UkVkArea out{au[kk], std::nullopt};
  if (k >= 1) out.v = av[kk];
  return out;
}

LineFit fit_line(std::vector<double> const& xs, std::vector<double> const& ys) {
  if (xs.size() != ys.size()) throw MalformedElement("fit_line needs matching x and y");
  LineFit fit;
  fit.points = xs.size();
  if (xs.size() < 2) return fit;
  double const count = static_cast<double>(xs.size());
  double const mx = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
  double const my = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

Envelope geometric_envelope(std::vector<BigCount> const& seq) {
  Envelope env;
  if (seq.size() < 2) return env;
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    xs.push_back(seq[k].convert_to<double>());
    ys.push_back(seq[k + 1].convert_to<double>());
  }
  env.C = fit_line(xs, ys).slope;
  for (std::size_t k = 0; k < xs.size(); ++k) env.D = std::max(env.D, ys[k] - env.C * xs[k]);
  env.holds = true;
  for (std::size_t k = 0; k < xs.size(); ++k)
    env.holds = env.holds && ys[k] <= env.C * xs[k] + env.D + 1e-9 * std::abs(ys[k]);
  return env;
}

DehnRow dehn_area(Word const& w, std::size_t max_coxeter_letters) {
  DehnRow row;
  row.n = w.rays();
  row.x = static_cast<int>(w.size());
  if (w.empty()) return row;
  SymRewrite const sym = rewrite_to_sym(w);
  if (sym.coxeter_word.size() > max_coxeter_letters)
    throw BudgetExceeded("symmetric word has " + std::to_string(sym.coxeter_word.size()) + " letters, cap " +
                         std::to_string(max_coxeter_letters));
  int const m = sym.n * sym.radius;
  DeletionResult const red = deletion_reduce(sym.coxeter_word, m);
  if (!red.reduced.empty()) throw InvariantViolation("symmetric word of a null word did not reduce to the empty word");

  row.len_symword = sym.symword.size();
  row.area_rewrite_gap = sym.trace.total();
  row.area_sym_reduction = red.trace.total();

  auto count = [&red](char const* cls) {
    auto it = red.trace.counts.find(cls);
    return it == red.trace.counts.end() ? std::uint64_t{0} : it->second;
  };
  BigCount expansion = BigCount(count("involution")) + BigCount(count("braid"));
  int kmax = 0;
  for (auto const& [k, c] : red.trace.commutation_offsets) kmax = std::max(kmax, k);
  std::vector<BigCount> av(static_cast<std::size_t>(kmax) + 1);
  for (int k = 1; k <= kmax; ++k) av[static_cast<std::size_t>(k)] = *uk_vk_area(k).v;
  for (auto const& [k, c] : red.trace.commutation_offsets) {
    if (k < 1) throw InvariantViolation("commutation between adjacent letters");
    expansion += BigCount(c) * av[static_cast<std::size_t>(k)];
  }
  row.area_relator_expansion = expansion;
  row.area_total = expansion + row.area_rewrite_gap;
  return row;
}

DehnReport dehn_experiment(DehnConfig const& config) {
  if (config.n < 3) throw Unsupported("the Dehn experiment needs n >= 3");
  if (config.x_max < 0 || config.samples < 0 || config.threads < 1)
    throw IndexOutOfRange("x_max and samples must be >= 0, threads >= 1");
  DehnReport report;
  report.config = config;

  struct Job {
    int x;
    int id;
  };
  std::vector<Job> jobs;
  for (int x = 1; x <= config.x_max; ++x)
    for (int s = 0; s < config.samples; ++s) jobs.push_back({x, s});

  std::vector<std::optional<DehnRow>> rows(jobs.size());
  std::vector<std::string> failures(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  auto run = [&](std::size_t idx) {
    Job const job = jobs[idx];
    try {
      Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(job.x), static_cast<std::uint64_t>(job.id)));
      Word const w = random_null_homotopic_word(rng, config.n, job.x);
      DehnRow row = dehn_area(w, config.max_coxeter_letters);
      row.x = job.x;
      row.sample_id = job.id;
      rows[idx] = std::move(row);
    } catch (BudgetExceeded const& e) {
      failures[idx] = e.what();
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };
  std::size_t const workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads), std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < jobs.size(); i += workers) run(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);

  std::map<int, BigCount> max_by_x;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (rows[i]) {
      auto& best = max_by_x[rows[i]->x];
      best = std::max(best, rows[i]->area_total);
      report.rows.push_back(std::move(*rows[i]));
    } else {
      report.skipped.push_back({jobs[i].x, jobs[i].id, failures[i]});
    }
  }

  report.fit_from = config.x_max >= 6 ? 4 : 1;
  std::vector<double> xs, ys;
  for (auto const& [x, a] : max_by_x) {
    if (x < report.fit_from || a <= 0) continue;
    xs.push_back(x);
    ys.push_back(std::log(a.convert_to<double>()));
  }
  report.log_max_area = fit_line(xs, ys);

  // Commutations at offset k cost A_v(k) and k reaches about n * x, so the
  // exponential part grows like n * (slope of ln A_v); the polynomial factor
  // x^15 adds at most 15 / x per unit of x.
  std::vector<double> ks, lv;
  for (int k = 4; k <= 12; ++k) {
    ks.push_back(k);
    lv.push_back(std::log(uk_vk_area(k).v->convert_to<double>()));
  }
  report.slope_cap = config.n * fit_line(ks, lv).slope + 15.0 / report.fit_from;
  return report;
}

void write_csv(DehnReport const& report, std::ostream& os) {
  auto const& c = report.config;
  os << "# seed=" << c.seed << " n=" << c.n << " x_max=" << c.x_max << " samples=" << c.samples << "\n";
  os << "n,x,sample_id,len_symword,area_rewrite_gap,area_sym_reduction,area_relator_expansion,area_total\n";
  for (auto const& r : report.rows)
    os << r.n << ',' << r.x << ',' << r.sample_id << ',' << r.len_symword << ',' << r.area_rewrite_gap << ','
       << r.area_sym_reduction << ',' << r.area_relator_expansion.str() << ',' << r.area_total.str() << "\n";
}

}  // namespace houghton
