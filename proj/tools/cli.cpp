#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "houghton/cubing.hpp"
#include "houghton/dehn.hpp"
#include "houghton/errors.hpp"
#include "houghton/generators.hpp"
#include "houghton/link_complex.hpp"
#include "houghton/poset.hpp"
#include "houghton/presentation.hpp"
#include "houghton/sampling.hpp"
#include "houghton/serialize.hpp"
#include "houghton/words.hpp"

namespace houghton::cli {

using nlohmann::json;

namespace {

// Rough footprint of one stored ball vertex with its index entry and edges.
constexpr std::size_t kBytesPerBallVertex = 1024;

std::size_t vertex_budget() {
  char const* env = std::getenv("HOUGHTON_BUDGET_MB");
  if (!env || !*env) return BallLimits{}.max_vertices;
  char* end = nullptr;
  unsigned long long const mb = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || mb == 0) throw ParseError("HOUGHTON_BUDGET_MB must be a positive integer");
  return static_cast<std::size_t>(mb) * 1024 * 1024 / kBytesPerBallVertex;
}

json echo(RunConfig const& c, std::string const& command) {
  return {{"command", command}, {"n", c.n},       {"r", c.r},         {"h", c.h},
          {"seed", c.seed},     {"samples", c.samples}, {"radius", c.radius}, {"height_cap", c.height_cap},
          {"x_max", c.x_max},   {"k_max", c.k_max}};
}

// Writes to --out when given, else to `out`.
void emit(RunConfig const& c, std::ostream& out, std::string const& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParseError("cannot open output file " + c.out);
  f << text;
}

void require(bool ok, std::string const& what) {
  if (!ok) throw IndexOutOfRange(what);
}

// Random monoid element with height in [lo, hi].
Element sample_vertex(Rng& rng, int n, int lo, int hi) {
  return random_monoid_element(rng, n, rng.uniform(lo, hi), rng.uniform(0, 4));
}

struct CheckResult {
  bool pass = true;
  json report;
};

CheckResult verify_relators(RunConfig const& c) {
  require(c.n >= 3, "verify relators needs --n >= 3");
  Presentation const p = houghton_relators(c.n);
  auto const bad = failing_relators(p);
  json failing = json::array();
  for (std::size_t i : bad) failing.push_back({{"family", p.relators[i].family}, {"word", p.tokens(p.relators[i])}});
  return {bad.empty(), {{"relators", p.relators.size()}, {"failing", failing}}};
}

CheckResult verify_sigma(RunConfig const& c) {
  require(c.n >= 1 && c.r >= 1, "verify sigma needs --n >= 1 and --r >= 1");
  SymmetricReport const rep = verify_presentation_realizes_sym(c.n, c.r);
  return {rep.ok(), to_json(rep)};
}

CheckResult verify_links(RunConfig const& c) {
  require(c.n >= 1 && c.samples >= 1 && c.height_cap >= 1, "verify links needs --n, --samples, --height-cap >= 1");
  Rng rng(mix_seed(c.seed, 7));
  int const flag_dim = std::min(c.n, 4);
  for (int s = 0; s < c.samples; ++s) {
    Element const v = sample_vertex(rng, c.n, 1, c.height_cap);
    bool const desc_ok = descending_link(v).complex == link_complex(c.n, v.height());
    bool const flag_ok = is_flag(full_link(v, flag_dim));
    if (!desc_ok || !flag_ok)
      return {false, {{"sampled", s + 1}, {"descending_matches", desc_ok}, {"full_link_flag", flag_ok}, {"vertex", to_json(v)}}};
  }
  return {true, {{"sampled", c.samples}}};
}

CheckResult verify_median(RunConfig const& c) {
  require(c.n >= 1 && c.samples >= 1 && c.height_cap >= 0, "verify median needs --n, --samples >= 1");
  Rng rng(mix_seed(c.seed, 11));
  for (int s = 0; s < c.samples; ++s) {
    Element const a = sample_vertex(rng, c.n, 0, c.height_cap);
    Element const b = sample_vertex(rng, c.n, 0, c.height_cap);
    Element const d = sample_vertex(rng, c.n, 0, c.height_cap);
    try {
      (void)median(a, b, d);
    } catch (InvariantViolation const& e) {
      return {false, {{"sampled", s + 1}, {"reason", e.what()}, {"triple", {to_json(a), to_json(b), to_json(d)}}}};
    }
  }
  return {true, {{"sampled", c.samples}}};
}

CheckResult verify_distance(RunConfig const& c) {
  require(c.n >= 1 && c.samples >= 1 && c.height_cap >= 0, "verify distance needs --n, --samples >= 1");
  Rng rng(mix_seed(c.seed, 13));
  for (int s = 0; s < c.samples; ++s) {
    Element const a = sample_vertex(rng, c.n, 0, c.height_cap);
    Element const b = sample_vertex(rng, c.n, 0, c.height_cap);
    int const formula = distance(a, b);
    auto const bfs = bfs_distance(a, b, formula);
    if (!bfs || *bfs != formula)
      return {false,
              {{"sampled", s + 1}, {"formula", formula}, {"bfs", bfs ? json(*bfs) : json(nullptr)}, {"pair", {to_json(a), to_json(b)}}}};
  }
  return {true, {{"sampled", c.samples}}};
}

CheckResult verify_ukvk(RunConfig const& c) {
  require(c.n >= 3 && c.k_max >= 0, "verify ukvk needs --n >= 3 and --k-max >= 0");
  json rows = json::array();
  bool pass = true;
  for (int k = 0; k <= c.k_max; ++k) {
    auto const [u, v] = uk_vk(k, c.n, 1, 2);
    bool const u_null = word_problem(u);
    bool const v_null = word_problem(v);
    pass = pass && u_null && (k == 0 || v_null);
    UkVkArea const area = uk_vk_area(k);
    rows.push_back({{"k", k},
                    {"u_null", u_null},
                    {"v_null", v_null},
                    {"A_u", area.u.str()},
                    {"A_v", area.v ? json(area.v->str()) : json(nullptr)}});
  }
  return {pass, {{"rows", rows}}};
}

int cmd_verify(std::string const& target, RunConfig const& c, std::ostream& out) {
  static std::map<std::string, std::function<CheckResult(RunConfig const&)>> const targets{
      {"relators", verify_relators}, {"sigma", verify_sigma},       {"links", verify_links},
      {"median", verify_median},     {"distance", verify_distance}, {"ukvk", verify_ukvk}};
  auto it = targets.find(target);
  if (it == targets.end()) throw CLI::ValidationError("target", "unknown verify target " + target);
  CheckResult const r = it->second(c);
  json report = {{"config", echo(c, "verify " + target)}, {"pass", r.pass}, {"report", r.report}};
  emit(c, out, report.dump(2) + "\n");
  return r.pass ? kPass : kCheckFailed;
}

int cmd_eval(std::string const& text, bool monoid, RunConfig const& c, std::ostream& out) {
  require(c.n >= 1, "--n must be >= 1");
  Word const w = parse_word(text, c.n, monoid ? Alphabet::Mixed : Alphabet::Group);
  Element const e = eval_word(w);
  json report = {{"config", echo(c, "eval")}, {"word", to_string(w)}, {"element", to_json(e)}, {"height", e.height()}};
  emit(c, out, report.dump(2) + "\n");
  return kPass;
}

int cmd_experiment(RunConfig const& c, std::ostream& out) {
  require(c.n >= 3, "the Dehn experiment needs --n >= 3");
  require(c.x_max >= 0 && c.samples >= 1, "--x-max must be >= 0 and --samples >= 1");
  DehnConfig dc;
  dc.n = c.n;
  dc.x_max = c.x_max;
  dc.samples = c.samples;
  dc.seed = c.seed;
  dc.threads = c.threads;
  DehnReport const rep = dehn_experiment(dc);
  std::ostringstream csv;
  write_csv(rep, csv);
  std::string const path = c.out.empty() ? "dehn.csv" : c.out;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file " + path);
  f << csv.str();

  json skipped = json::array();
  for (auto const& s : rep.skipped) skipped.push_back({{"x", s.x}, {"sample_id", s.sample_id}, {"reason", s.reason}});
  bool const slope_ok = rep.log_max_area.points < 2 || rep.log_max_area.slope <= rep.slope_cap;
  json summary = {{"config", echo(c, "experiment dehn")},
                  {"csv", path},
                  {"rows", rep.rows.size()},
                  {"skipped", skipped},
                  {"fit", {{"from_x", rep.fit_from},
                           {"slope", rep.log_max_area.slope},
                           {"intercept", rep.log_max_area.intercept},
                           {"r2", rep.log_max_area.r2},
                           {"points", rep.log_max_area.points},
                           {"slope_cap", rep.slope_cap}}},
                  {"pass", slope_ok}};
  out << summary.dump(2) << "\n";
  return slope_ok ? kPass : kCheckFailed;
}

int cmd_export(std::string const& what, RunConfig const& c, std::ostream& out) {
  if (what == "ball") {
    require(c.n >= 1, "--n must be >= 1");
    require(c.radius >= 0 && c.height_cap >= 0, "--radius and --height-cap must be >= 0");
    require(c.format.empty() || c.format == "dot", "ball export supports --format dot only");
    BallLimits limits;
    limits.radius = c.radius;
    limits.height_cap = c.height_cap;
    limits.max_vertices = vertex_budget();
    Ball const ball = build_ball(Element::identity(c.n), limits);
    emit(c, out, "// " + echo(c, "export ball").dump() + "\n" + ball_to_dot(ball));
    return kPass;
  }
  if (what == "link") {
    require(c.n >= 1 && c.h >= 0, "--n must be >= 1 and --height >= 0");
    require(c.format.empty() || c.format == "json", "link export supports --format json only");
    std::uint64_t faces = 0;
    for (int d = 0; d < std::min(c.n, c.h); ++d) faces += link_face_count(c.n, c.h, d);
    if (faces > vertex_budget()) throw BudgetExceeded("L_{n,h} has " + std::to_string(faces) + " faces, over the budget");
    json j = link_to_json(c.n, c.h, link_complex(c.n, c.h));
    j["seed"] = c.seed;
    emit(c, out, j.dump(2) + "\n");
    return kPass;
  }
  throw CLI::ValidationError("what", "unknown export target " + what);
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Houghton groups: exact elements, presentations, cubings and area experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with one [subcommand] section of option defaults; flags override");
  app.fallthrough();
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of rays");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--samples", cfg.samples, "sample count");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "json | csv | dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  };

  std::string word_text;
  bool monoid = false;
  auto* eval = app.add_subcommand("eval", "evaluate a word and print the element");
  common(eval);
  eval->add_option("word", word_text, "whitespace-separated tokens g1 G1 a A t1");
  eval->add_flag("--monoid", monoid, "allow t letters");

  std::string target;
  auto* verify = app.add_subcommand("verify", "run a check suite; exit 1 on the first failure");
  common(verify);
  verify->add_option("target", target, "relators | sigma | links | median | distance | ukvk")->required();
  verify->add_option("--r", cfg.r, "ball radius of the symmetric presentation");
  verify->add_option("--height-cap", cfg.height_cap, "largest sampled height");
  verify->add_option("--k-max", cfg.k_max, "largest k for ukvk");

  std::string experiment;
  auto* exp = app.add_subcommand("experiment", "run the Dehn area experiment");
  common(exp);
  exp->add_option("kind", experiment, "dehn")->required()->check(CLI::IsMember({"dehn"}));
  exp->add_option("--x-max", cfg.x_max, "largest word length");
  exp->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string what;
  auto* exprt = app.add_subcommand("export", "export a ball (DOT) or a link complex (JSON)");
  common(exprt);
  exprt->add_option("what", what, "ball | link")->required()->check(CLI::IsMember({"ball", "link"}));
  exprt->add_option("--radius", cfg.radius, "ball radius");
  exprt->add_option("--height-cap", cfg.height_cap, "ball height cap");
  exprt->add_option("--height", cfg.h, "link height h");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  try {
    if (*eval) return cmd_eval(word_text, monoid, cfg, out);
    if (*verify) return cmd_verify(target, cfg, out);
    if (*exp) return cmd_experiment(cfg, out);
    if (*exprt) return cmd_export(what, cfg, out);
  } catch (BudgetExceeded const& e) {
    err << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (CLI::Error const& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (IndexOutOfRange const& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (Unsupported const& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (Error const& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace houghton::cli
