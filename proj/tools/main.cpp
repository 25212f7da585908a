#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/gamma_checks.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/homotopy.hpp>
#include <gammaspace/io.hpp>
#include <gammaspace/marked.hpp>
#include <gammaspace/simpset_ops.hpp>
#include <gammaspace/suite.hpp>

#include "inputs.hpp"

namespace gs::cli {
namespace {

enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

struct TaggedVerdict {
  std::string tag;
  Verdict verdict;
};

struct Outcome {
  json result = json::object();
  std::vector<TaggedVerdict> verdicts;
  std::optional<int> exit_override;

  void add(std::string tag, Verdict v) { verdicts.push_back({std::move(tag), std::move(v)}); }
};

struct Options {
  Config cfg;
  std::string tier = "iso";
  int dim_cap = -1;
  std::string format = "json";
  bool no_timing = false;

  // Command operands.
  std::vector<std::string> operands;
  int src = 0, dst = 0, k = -1, l = -1, n = -1, max_level = -1;
  std::string map_text, kind = "flat", edges, corpus = "default", only;
  bool crosscheck = false;
};

Verdict exact(bool ok, std::string range, std::string detail = {}) {
  Verdict v;
  v.status = ok ? Status::holds : Status::fails;
  v.tier = "exact";
  v.range = std::move(range);
  if (!ok) v.detail = std::move(detail);
  return v;
}

json counts(const SimpSet& s) { return s.cell_counts(); }

int cap_or(const Options& o, int fallback) { return o.dim_cap >= 0 ? o.dim_cap : fallback; }

const std::string& operand(const Options& o, std::size_t i) {
  if (i >= o.operands.size()) throw InputError("missing operand " + std::to_string(i + 1));
  return o.operands[i];
}

// ---- commands ----

Outcome cmd_factorize(const Options& o, InputResolver&) {
  const GammaMorphism f = GammaMorphism::make(o.src, o.dst, parse_int_list(o.map_text));
  const InertActive ia = factor_inert_active(f);
  Outcome out;
  out.result = {{"morphism", f.to_json()}, {"support", ia.support}, {"inert", ia.inert.to_json()},
                {"active", ia.active.to_json()}};
  out.add("gamma-op/inert-active",
          exact(ia.inert.is_inert() && ia.active.is_active() && compose(ia.active, ia.inert) == f, f.name()));
  return out;
}

Outcome cmd_convolve(const Options& o, InputResolver& in) {
  const PresentedGammaSpace x = in.presented(operand(o, 0));
  const PresentedGammaSpace y = in.presented(operand(o, 1));
  const PresentedGammaSpace d = day_convolve(x, y);
  Outcome out;
  json levels = json::array();
  for (int n = 0; n <= o.cfg.level_bound; ++n) levels.push_back({{"level", n}, {"cells", counts(evaluate(d, n))}});
  out.result = {{"convolution", io::to_json(d)}, {"levels", levels}};
  return out;
}

Outcome cmd_map_space(const Options& o, InputResolver& in) {
  const PresentedGammaSpace x = in.presented(operand(o, 0));
  const TabulatedGammaSpace y = in.tabulated(operand(o, 1));
  Budget budget = o.cfg.make_budget();
  const MappingSpace m = mapping_space(x, y, budget);
  Outcome out;
  out.result = {{"mapping_space", io::to_json(m.set)}, {"cells", counts(m.set)}, {"candidates", budget.used}};
  return out;
}

Outcome cmd_internal_hom(const Options& o, InputResolver& in) {
  const PresentedGammaSpace x = in.presented(operand(o, 0));
  const TabulatedGammaSpace y = in.tabulated(operand(o, 1));
  Budget budget = o.cfg.make_budget();
  const InternalHom h = internal_hom(x, y, budget, o.max_level);
  Outcome out;
  out.result = {{"internal_hom", io::to_json(h.space)}, {"level_bound", h.space.level_bound()}};
  // Representable source: compare with precomposition by the smash.
  const bool representable_source = x.glue().empty() && x.cells().size() == 1 && x.cells()[0].shape.total_cells() == 1;
  if (representable_source && x.cells()[0].level > 0) {
    const int n = x.cells()[0].level;
    const GammaSpaceMap c = internal_hom_comparison(h, y, n);
    out.add("internal-hom/representable",
            exact(levelwise_iso(c), "levels<=" + std::to_string(h.space.level_bound()), "comparison is not an isomorphism"));
  }
  return out;
}

Outcome cmd_segal_check(const Options& o, InputResolver& in) {
  const TabulatedGammaSpace x = in.tabulated(operand(o, 0));
  const SegalTier tier = parse_segal_tier(o.tier);
  Budget budget = o.cfg.make_budget();
  Outcome out;
  if (o.k >= 1 && o.l >= 1) {
    if (o.k + o.l > x.level_bound()) throw ResourceError("k + l exceeds the level bound");
    const SegalMap s = segal_map(x, o.k, o.l);
    out.result = {{"k", o.k}, {"l", o.l}, {"source_cells", counts(s.map.source())}, {"target_cells", counts(s.map.target())}};
    out.add("segal/" + o.tier, segal_check(x, o.k, o.l, tier, budget, o.cfg.word_cap));
  } else {
    out.result = {{"max_sum", x.level_bound()}};
    out.add("segal/" + o.tier, segal_sweep(x, x.level_bound(), tier, budget, o.cfg.word_cap));
  }
  return out;
}

Outcome cmd_normalize(const Options& o, InputResolver& in) {
  const TabulatedGammaSpace x = in.tabulated(operand(o, 0));
  const Normalization n = normalize(x);
  Outcome out;
  out.result = {{"normalized", io::to_json(n.space)}};
  out.add("normalize/pushout", check_naturality(n.eta, std::min(3, n.space.level_bound())));
  return out;
}

Outcome cmd_semiadd_probe(const Options& o, InputResolver& in) {
  const PresentedGammaSpace x = in.presented(operand(o, 0));
  Budget budget = o.cfg.make_budget();
  const SemiadditivityReport r = semiadditivity_probe(x, o.cfg.level_bound, budget);
  Outcome out;
  out.result = r.to_json();
  out.add("semiadditive/coproduct", r.coproduct);
  out.add("semiadditive/product", r.product);
  return out;
}

Outcome cmd_ho_cat(const Options& o, InputResolver& in) {
  const TabulatedGammaSpace x = in.tabulated(operand(o, 0));
  Outcome out;
  out.result = {{"category", io::to_json(homotopy_category(x, o.cfg.word_cap))}};
  return out;
}

Outcome cmd_mark(const Options& o, InputResolver& in) {
  const SimpSet s = in.simpset(operand(o, 0));
  MarkedSimpSet m;
  if (!o.edges.empty()) {
    std::vector<int> ids;
    std::size_t start = 0;
    while (start <= o.edges.size()) {
      const std::size_t end = std::min(o.edges.find(',', start), o.edges.size());
      const std::string id = o.edges.substr(start, end - start);
      const int c = s.find_cell(1, id);
      if (c < 0) throw InputError("no edge '" + id + "'");
      ids.push_back(s.table_id(1, c));
      start = end + 1;
    }
    m = MarkedSimpSet(s, ids);
  } else if (o.kind == "flat" || o.kind == "sharp") {
    m = mark(s, o.kind == "flat" ? Marking::flat : Marking::sharp);
  } else {
    throw InputError("--kind must be flat or sharp");
  }
  Outcome out;
  out.result = {{"marked", io::to_json(m)}, {"nondegenerate_marked", m.nondegenerate_marked_count()}};
  return out;
}

Outcome cmd_hom_marked(const Options& o, InputResolver& in) {
  const MarkedSimpSet x = in.marked(operand(o, 0));
  const MarkedSimpSet y = in.marked(operand(o, 1));
  Budget budget = o.cfg.make_budget();
  const MarkedHom h = hom_marked(x, y, budget);
  Outcome out;
  out.result = {{"plus", io::to_json(h.plus)}, {"sharp", io::to_json(h.sharp.set)}, {"flat_cells", counts(h.flat())},
                {"sharp_cells", counts(h.sharp.set)}};
  return out;
}

Outcome cmd_relative_nerve(const Options& o, InputResolver& in) {
  const RelativeNerveInput d = in.diagram(operand(o, 0));
  const int cap = cap_or(o, 2);
  Budget budget = o.cfg.make_budget();
  const RelativeNerve rn = relative_nerve(d, cap, budget);
  Outcome out;
  out.result = {{"total", io::to_json(rn.total)}, {"proj", io::to_json(rn.proj)}, {"cells", counts(rn.total)}, {"dim_cap", cap}};
  bool fibers = true;
  for (int obj = 0; obj < d.base.object_count(); ++obj) fibers = fibers && fiber_to_value(rn, fiber(rn, obj), d, obj).is_iso();
  out.add("relative-nerve/fiber", exact(fibers, "dims<=" + std::to_string(cap), "a fiber differs from its value"));
  return out;
}

Outcome cmd_cocart_edges(const Options& o, InputResolver& in) {
  const RelativeNerveInput d = in.diagram(operand(o, 0));
  const int cap = cap_or(o, 3);
  Budget budget = o.cfg.make_budget();
  const RelativeNerve rn = relative_nerve(d, cap, budget);
  const CocartesianResult r = cocartesian_edges(rn.proj, cap, budget);
  json edges = json::array();
  for (int e : r.edges) edges.push_back(io::ref_to_json(rn.total, 1, e));
  std::sort(edges.begin(), edges.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  Outcome out;
  out.result = {{"edges", edges}, {"edge_count", rn.total.size(1)}, {"cocartesian_count", r.edges.size()},
                {"natural_marking", io::to_json(r.natural_marking)}};
  out.add("cocartesian/detection", r.detection);
  out.add("cocartesian/fibration", r.fibration);
  if (o.crosscheck) out.add("cocartesian/invertible", cocartesian_crosscheck(rn, d, r, o.cfg.word_cap));
  return out;
}

Outcome cmd_sm_check(const Options& o, InputResolver& in) {
  const TabulatedGammaSpace x = in.tabulated(operand(o, 0));
  const int level = o.max_level >= 0 ? std::min(o.max_level, x.level_bound()) : std::min(4, x.level_bound());
  const RelativeNerveInput d = gamma_diagram(x, level);
  Budget budget = o.cfg.make_budget();
  const RelativeNerve rn = relative_nerve(d, cap_or(o, 1), budget);
  const SmQcatResult r = sm_qcat_check(rn, d, parse_segal_tier(o.tier), level, budget, o.cfg.word_cap);
  Outcome out;
  out.result = {{"max_level", level}, {"total_cells", counts(rn.total)}};
  out.add("sm-qcat/segal", r.verdict);
  return out;
}

FinCat gamma_base(const Options& o, int fallback) { return gamma_op_category(o.max_level >= 0 ? o.max_level : fallback); }

Outcome cmd_nelg(const Options& o, InputResolver&) {
  if (o.k < 0) throw InputError("--k is required");
  const OverObject x = nelg(gamma_base(o, std::max(o.k, 2)), o.k, cap_or(o, 2));
  Outcome out;
  out.result = {{"over_object", io::to_json(x)}, {"cells", counts(x.total.set())}};
  return out;
}

Outcome cmd_upsilon(const Options& o, InputResolver&) {
  if (o.k < 0 || o.l < 0) throw InputError("--k and --l are required");
  const Upsilon u = upsilon(gamma_base(o, o.k + o.l), o.k, o.l, cap_or(o, 2));
  Outcome out;
  out.result = {{"source", io::to_json(u.source)}, {"target", io::to_json(u.target)}, {"map", io::to_json(u.map)}};
  out.add("over-base/upsilon", exact(u.map.then(u.target.proj) == u.source.proj, "dims<=" + std::to_string(cap_or(o, 2)),
                                     "upsilon does not commute with the projections"));
  return out;
}

Outcome cmd_hom_over_base(const Options& o, InputResolver& in) {
  const SimpSet base = nerve(gamma_base(o, 2), cap_or(o, 2));
  const OverObject x = in.over_object(operand(o, 0), base);
  const OverObject y = in.over_object(operand(o, 1), base);
  Budget budget = o.cfg.make_budget();
  const OverHom h = hom_over_base(x, y, budget);
  Outcome out;
  out.result = {{"plus", io::to_json(h.plus)}, {"sharp", io::to_json(h.sharp.set)}, {"cells", counts(h.exp.set)}};
  return out;
}

Outcome cmd_r_plus(const Options& o, InputResolver& in) {
  if (o.k < 0) throw InputError("--k is required");
  const FinCat gop = gamma_base(o, std::max(o.k, 2));
  const OverObject x = in.over_object(operand(o, 0), nerve(gop, cap_or(o, 2)));
  Budget budget = o.cfg.make_budget();
  const MarkedSimpSet r = r_plus_level(x, gop, o.k, budget);
  Outcome out;
  out.result = {{"level", o.k}, {"marked", io::to_json(r)}, {"cells", counts(r.set())}};
  return out;
}

Outcome cmd_tau1(const Options& o, InputResolver& in) {
  const SimpSet s = in.simpset(operand(o, 0));
  const Tau1 t = tau1(s, o.cfg.word_cap);
  Outcome out;
  out.result = {{"category", io::to_json(t.cat)}, {"is_nerve", is_nerve_of_tau1(s, t)}};
  return out;
}

Outcome cmd_j(const Options& o, InputResolver& in) {
  const SimpSet s = in.simpset(operand(o, 0));
  const Sub j = j_qcat(s, o.cfg.word_cap);
  Outcome out;
  out.result = {{"j", io::to_json(j.set)}, {"inclusion", io::to_json(j.inclusion)}, {"cells", counts(j.set)}};
  return out;
}

Outcome cmd_rexp(const Options& o, InputResolver& in) {
  const SimpSet x = in.simpset(operand(o, 0));
  const SimpSet a = in.simpset(operand(o, 1));
  Budget budget = o.cfg.make_budget();
  const RestrictedExp r = restricted_exp(x, a, budget, o.cfg.word_cap);
  Outcome out;
  out.result = {{"restricted", io::to_json(r.sub.set)}, {"cells", counts(r.sub.set)}, {"exponential_cells", counts(r.exp.set)}};
  return out;
}

Outcome cmd_hmap(const Options& o, InputResolver& in) {
  const SimpSet a = in.simpset(operand(o, 0));
  const SimpSet x = in.simpset(operand(o, 1));
  Budget budget = o.cfg.make_budget();
  const HomotopyMappingSpace h = h_map_space(a, x, budget, o.cfg.word_cap);
  Outcome out;
  out.result = {{"space", io::to_json(h.sub.set)}, {"cells", counts(h.sub.set)}, {"exponential_cells", counts(h.exp.set)}};
  return out;
}

Outcome cmd_pushout_product(const Options& o, InputResolver& in) {
  const SimpMap f = in.mono(operand(o, 0));
  const SimpMap g = in.mono(operand(o, 1));
  const SimpMap p = pushout_product(f, g);
  Outcome out;
  out.result = {{"source", io::to_json(p.source())}, {"target", io::to_json(p.target())}, {"map", io::to_json(p)}};
  out.add("homotopy/pushout-product", exact(p.is_mono(), "dims<=" + std::to_string(p.target().dim_bound()),
                                            "pushout-product is not a monomorphism"));
  return out;
}

// Budget for check-suite when --budget is not given; the corpus's largest
// enumerations (associativity at level 6, Yoneda at n = 6) need it.
constexpr std::uint64_t kSuiteBudget = 50'000'000;

Outcome cmd_check_suite(const Options& o, InputResolver&) {
  if (o.corpus != "default") throw InputError("unknown corpus '" + o.corpus + "'");
  std::vector<suite::CheckResult> results;
  if (o.only.empty()) {
    results = suite::run_acceptance(o.cfg);
    for (auto& r : suite::run_invariants(o.cfg)) results.push_back(std::move(r));
  } else {
    for (int id : parse_int_list(o.only)) {
      if (id < 1 || id > suite::criterion_count()) throw InputError("no criterion " + std::to_string(id));
      results.push_back(suite::run_criterion(id, o.cfg));
    }
  }
  Outcome out;
  json checks = json::array();
  int passed = 0;
  for (const auto& r : results) {
    checks.push_back(r.to_json(!o.no_timing));
    if (o.no_timing ? r.verdict.holds() : r.passed()) ++passed;
    Verdict v = r.verdict;
    if (!o.no_timing && v.holds() && !r.within_ceiling()) {
      v.status = Status::fails;
      v.detail = "runtime ceiling exceeded";
    }
    out.add(r.tag, v);
  }
  out.result = {{"corpus", o.corpus}, {"checks", checks}, {"passed", passed}, {"total", results.size()}};
  if (o.no_timing) {
    // Ceilings are not judged without timing.
    std::vector<suite::CheckResult> untimed = results;
    for (auto& r : untimed) r.ceiling = 0;
    out.exit_override = suite::exit_code(untimed);
  } else {
    out.exit_override = suite::exit_code(results);
  }
  return out;
}

using Handler = std::function<Outcome(const Options&, InputResolver&)>;

int exit_for(const Outcome& out) {
  if (out.exit_override) return *out.exit_override;
  int code = kPass;
  for (const auto& v : out.verdicts) {
    if (v.verdict.fails()) return kFail;
    if (v.verdict.status == Status::inconclusive) code = kInconclusive;
  }
  return code;
}

json config_json(const Options& o) {
  return {{"dim_bound", o.cfg.dim_bound}, {"level_bound", o.cfg.level_bound}, {"budget", o.cfg.budget},
          {"word_cap", o.cfg.word_cap},   {"tier", o.tier},                   {"dim_cap", o.dim_cap}};
}

json verdicts_json(const std::vector<TaggedVerdict>& verdicts) {
  json arr = json::array();
  for (const auto& v : verdicts) {
    json j = v.verdict.to_json();
    j["tag"] = v.tag;
    arr.push_back(std::move(j));
  }
  std::stable_sort(arr.begin(), arr.end(), [](const json& a, const json& b) { return a["tag"] < b["tag"]; });
  return arr;
}

int run(const std::string& command, const Handler& handler, const Options& o) {
  InputResolver inputs(o.cfg);
  json report{{"command", command}, {"config", config_json(o)}};
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    Outcome out = handler(o, inputs);
    report["result"] = std::move(out.result);
    report["verdicts"] = verdicts_json(out.verdicts);
    code = exit_for(out);
  } catch (const InputError& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    code = kInputError;
  } catch (const BudgetExceeded& e) {
    Verdict v{Status::inconclusive, "budget", "", e.what(), {}};
    report["verdicts"] = verdicts_json({{command, v}});
    code = kInconclusive;
  } catch (const ResourceError& e) {
    Verdict v{Status::inconclusive, "resource", "", e.what(), {}};
    report["verdicts"] = verdicts_json({{command, v}});
    code = kInconclusive;
  }
  report["inputs_digest"] = inputs.digest();
  report["exit_code"] = code;
  if (!o.no_timing)
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << '\n';
  return code;
}

}  // namespace
}  // namespace gs::cli

int main(int argc, char** argv) {
  using namespace gs::cli;
  Options o;
  CLI::App app{"Finite computations with Gamma-spaces, marked simplicial sets and relative nerves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--dim-bound", o.cfg.dim_bound, "Simplicial dimension bound D")->capture_default_str();
  app.add_option("--level-bound", o.cfg.level_bound, "Gamma-op level bound N")->capture_default_str();
  auto* budget_opt = app.add_option("--budget", o.cfg.budget, "Candidate budget per search (check-suite: 5e7 unless given)")
                         ->capture_default_str();
  app.add_option("--word-cap", o.cfg.word_cap, "Word length cap for fundamental categories")->capture_default_str();
  app.add_option("--tier", o.tier, "Segal tier: iso, cat-equiv, ho-necessary")->capture_default_str();
  app.add_option("--dim-cap", o.dim_cap, "Dimension cap for nerves and lifting searches (command default when unset)");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json"}))->capture_default_str();
  app.add_flag("--no-timing", o.no_timing, "Omit timings so reports are byte-for-byte reproducible");

  std::map<CLI::App*, std::pair<std::string, Handler>> handlers;
  auto command = [&](const std::string& name, const std::string& help, Handler h, int operands,
                     const std::string& operand_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (operands > 0) sub->add_option("operands", o.operands, operand_help)->expected(operands)->required();
    handlers[sub] = {name, std::move(h)};
    return sub;
  };

  auto* f = command("factorize", "Inert/active factorization of a map of finite pointed sets", cmd_factorize, 0, "");
  f->add_option("--src", o.src, "Source level")->required();
  f->add_option("--dst", o.dst, "Target level")->required();
  f->add_option("--map", o.map_text, "Images of 1..src, comma separated")->required();

  command("convolve", "Day convolution of two presented Gamma-spaces", cmd_convolve, 2, "X Y");
  command("map-space", "Mapping space Map(X, Y)", cmd_map_space, 2, "X (presented) Y");
  command("internal-hom", "Internal hom [X, Y]", cmd_internal_hom, 2, "X (presented) Y")
      ->add_option("--max-level", o.max_level, "Largest level to build");
  auto* seg = command("segal-check", "Segal condition at (k, l), or a sweep up to the level bound", cmd_segal_check, 1, "X");
  seg->add_option("--k", o.k);
  seg->add_option("--l", o.l);
  command("normalize", "Normalization X(n) / X(0)", cmd_normalize, 1, "X");
  command("semiadd-probe", "Coproduct and product comparisons through X * h", cmd_semiadd_probe, 1, "X (presented)");
  command("ho-cat", "Homotopy category of X(1)", cmd_ho_cat, 1, "X");
  auto* mk = command("mark", "Mark a simplicial set", cmd_mark, 1, "S");
  mk->add_option("--kind", o.kind, "flat or sharp")->capture_default_str();
  mk->add_option("--edges", o.edges, "Comma separated edge ids to mark");
  command("hom-marked", "Marked mapping object [X, Y]^+ and its sharp part", cmd_hom_marked, 2, "X Y");
  command("relative-nerve", "Relative nerve of a diagram of simplicial sets", cmd_relative_nerve, 1, "D");
  command("cocart-edges", "coCartesian edges of the relative nerve projection", cmd_cocart_edges, 1, "D")
      ->add_flag("--crosscheck", o.crosscheck, "Compare with invertibility in the fundamental categories");
  auto* sm = command("sm-check", "Symmetric monoidal quasi-category check via the relative nerve over Gamma-op", cmd_sm_check, 1, "X");
  sm->add_option("--max-level", o.max_level);
  auto* ne = command("nelg", "Sharp nerve of the coslice k+/Gamma-op over Gamma-op", cmd_nelg, 0, "");
  ne->add_option("--k", o.k)->required();
  ne->add_option("--max-level", o.max_level);
  auto* up = command("upsilon", "nelg(k) + nelg(l) -> nelg(k + l)", cmd_upsilon, 0, "");
  up->add_option("--k", o.k)->required();
  up->add_option("--l", o.l)->required();
  up->add_option("--max-level", o.max_level);
  command("hom-over-base", "Marked mapping object over the nerve of Gamma-op", cmd_hom_over_base, 2, "X Y")
      ->add_option("--max-level", o.max_level);
  auto* rp = command("r-plus", "Level k of R^+(X) = [nelg(k), X]^+", cmd_r_plus, 1, "X");
  rp->add_option("--k", o.k)->required();
  rp->add_option("--max-level", o.max_level);
  command("tau1", "Fundamental category", cmd_tau1, 1, "S");
  command("j", "Largest Kan complex inside a quasi-category", cmd_j, 1, "S");
  command("rexp", "Restricted exponential X^(A)", cmd_rexp, 2, "X A");
  command("hmap", "Homotopy mapping space J(X^A)", cmd_hmap, 2, "A X");
  command("pushout-product", "Pushout-product of two monomorphisms", cmd_pushout_product, 2, "F G");
  auto* cs = command("check-suite", "Run the acceptance criteria and invariants on the built-in corpus", cmd_check_suite, 0, "");
  cs->add_option("--corpus", o.corpus)->capture_default_str();
  cs->add_option("--only", o.only, "Comma separated criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  for (auto& [sub, named] : handlers) {
    if (!sub->parsed()) continue;
    if (named.first == "check-suite" && budget_opt->count() == 0) o.cfg.budget = kSuiteBudget;
    return run(named.first, named.second, o);
  }
  return kInputError;
}
