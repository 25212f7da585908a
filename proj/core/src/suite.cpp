#include <gammaspace/suite.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include <gammaspace/gamma_checks.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/homotopy.hpp>
#include <gammaspace/io.hpp>
#include <gammaspace/marked.hpp>
#include <gammaspace/simpset_ops.hpp>

namespace gs::suite {

namespace {

// First failure wins; inconclusive outcomes are kept unless something fails.
class Tally {
 public:
  void require(bool ok, const std::string& what, json witness = {}) {
    ++cases_;
    if (ok || status_ == Status::fails) return;
    status_ = Status::fails;
    detail_ = what;
    witness_ = std::move(witness);
  }
  void absorb(const Verdict& v, const std::string& what) {
    ++cases_;
    if (v.fails() && status_ != Status::fails) {
      status_ = Status::fails;
      detail_ = what + (v.detail.empty() ? "" : ": " + v.detail);
      witness_ = v.witness;
    } else if (v.status == Status::inconclusive && status_ == Status::holds) {
      status_ = Status::inconclusive;
      detail_ = what + (v.detail.empty() ? "" : ": " + v.detail);
    }
  }
  void inconclusive(const std::string& what) {
    if (status_ == Status::holds) {
      status_ = Status::inconclusive;
      detail_ = what;
    }
  }
  int cases() const { return cases_; }
  Verdict verdict(std::string tier, std::string range) const {
    Verdict v;
    v.status = status_;
    v.tier = std::move(tier);
    v.range = std::move(range);
    v.detail = detail_;
    v.witness = witness_;
    return v;
  }

 private:
  Status status_ = Status::holds;
  std::string detail_;
  json witness_;
  int cases_ = 0;
};

Verdict iso(const SimpSet& a, const SimpSet& b, const Config& cfg) {
  Budget budget = cfg.make_budget();
  return iso_check(a, b, budget).verdict;
}

std::string levels_range(int n) { return "levels<=" + std::to_string(n); }

SimpMap vertex_map(const SimpSet& target, int vertex_table_id) {
  const SimpSet pt = point(target.dim_bound());
  std::vector<std::vector<int>> images(pt.dim_bound() + 1);
  images[0] = {vertex_table_id};
  return SimpMap(pt, target, images);
}

SimpSet one_edge_circle(int dim_bound) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  cells[0] = {{"v", {}}};
  cells[1] = {{"e", {{0, {}}, {0, {}}}}};
  return SimpSet(dim_bound, cells);
}

PresentedGammaSpace renamed(const PresentedGammaSpace& x, std::string name) {
  return PresentedGammaSpace(x.cells(), x.glue(), std::move(name));
}

// Table ids of the image of a map, per dimension.
std::vector<std::set<int>> image_ids(const SimpMap& f) {
  std::vector<std::set<int>> out(f.top() + 1);
  for (int n = 0; n <= f.top(); ++n)
    for (int x = 0; x < f.source().size(n); ++x) out[n].insert(f(n, x));
  return out;
}

struct CriterionSpec {
  const char* id;
  const char* title;
  const char* tag;
  double ceiling;
  std::function<Verdict(const Config&, json&)> run;
};

CheckResult timed(const std::string& id, const std::string& title, const std::string& tag, double ceiling,
                  const std::function<Verdict(json&)>& body) {
  CheckResult r{id, title, tag, {}, 0, ceiling, json::object()};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.verdict = body(r.details);
  } catch (const BudgetExceeded& e) {
    r.verdict.status = Status::inconclusive;
    r.verdict.detail = e.what();
  } catch (const ResourceError& e) {
    r.verdict.status = Status::inconclusive;
    r.verdict.detail = e.what();
  } catch (const InputError& e) {
    r.verdict.status = Status::fails;
    r.verdict.detail = std::string("input error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---- A1: inert/active factorization ----

bool order_preserving_on_support(const GammaMorphism& i) {
  int last = 0;
  for (int v : i.map)
    if (v != 0) {
      if (v <= last) return false;
      last = v;
    }
  return true;
}

Verdict criterion_factorization(const Config&, json& details) {
  constexpr int kMax = 4;
  // inert[n][k]: inert maps n -> k, order preserving on the support.
  // active[k][m]: active maps k -> m.
  std::vector<std::vector<std::vector<GammaMorphism>>> inert(kMax + 1, std::vector<std::vector<GammaMorphism>>(kMax + 1));
  std::vector<std::vector<std::vector<GammaMorphism>>> active(kMax + 1, std::vector<std::vector<GammaMorphism>>(kMax + 1));
  for (int n = 0; n <= kMax; ++n)
    for (int k = 0; k <= kMax; ++k)
      for (auto& f : enumerate_homs(n, k)) {
        if (f.is_inert() && order_preserving_on_support(f)) inert[n][k].push_back(f);
        if (f.is_active()) active[n][k].push_back(f);
      }
  Tally t;
  std::uint64_t morphisms = 0;
  for (int n = 0; n <= kMax; ++n)
    for (int m = 0; m <= kMax; ++m)
      for (const auto& f : enumerate_homs(n, m)) {
        ++morphisms;
        int found = 0;
        const GammaMorphism* fi = nullptr;
        const GammaMorphism* fa = nullptr;
        for (int k = 0; k <= n; ++k)
          for (const auto& i : inert[n][k])
            for (const auto& a : active[k][m])
              if (compose(a, i) == f) {
                ++found;
                fi = &i;
                fa = &a;
              }
        if (found != 1) {
          t.require(false, "morphism " + f.name() + " has " + std::to_string(found) + " factorizations",
                    json{{"morphism", f.to_json()}});
          continue;
        }
        const InertActive ia = factor_inert_active(f);
        t.require(ia.inert == *fi && ia.active == *fa && ia.support == f.support(),
                  "factor_inert_active disagrees with the exhaustive search on " + f.name());
      }
  details["morphisms"] = morphisms;
  return t.verdict("exact", levels_range(kMax));
}

// ---- A2: Day convolution ----

Verdict criterion_day(const Config& cfg, json& details) {
  const int n_max = cfg.level_bound;
  const auto corpus = presented_corpus(2);
  const PresentedGammaSpace unit = representable(1, 2);
  Tally t;
  int unit_cases = 0, symmetry_cases = 0, assoc_cases = 0, oracle_cases = 0;
  auto same_levels = [&](const PresentedGammaSpace& a, const PresentedGammaSpace& b, const std::string& what) {
    for (int n = 0; n <= n_max; ++n) t.absorb(iso(evaluate(a, n), evaluate(b, n), cfg), what + " level " + std::to_string(n));
  };
  for (const auto& x : corpus) {
    same_levels(day_convolve(unit, x.space), x.space, "unit (left) on " + x.name);
    same_levels(day_convolve(x.space, unit), x.space, "unit (right) on " + x.name);
    ++unit_cases;
  }
  std::vector<TabulatedGammaSpace> generators;
  for (const auto& x : corpus) generators.push_back(tabulate(x.space, x.space.generation_bound()));
  const int size = static_cast<int>(corpus.size());
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      const auto& x = corpus[i].space;
      const auto& y = corpus[j].space;
      const int gx = x.generation_bound(), gy = y.generation_bound();
      if (gx * gy > 4) continue;
      const PresentedGammaSpace xy = day_convolve(x, y);
      same_levels(xy, day_convolve(y, x), "symmetry on " + corpus[i].name + ", " + corpus[j].name);
      ++symmetry_cases;
      for (int n = 0; n <= n_max; ++n)
        t.absorb(iso(evaluate(xy, n), coend_oracle(generators[i], gx, generators[j], gy, n), cfg),
                 "coend oracle on " + corpus[i].name + ", " + corpus[j].name + " level " + std::to_string(n));
      ++oracle_cases;
      for (int k = j; k < size; ++k) {
        const auto& z = corpus[k].space;
        if (gx * gy * z.generation_bound() > 4) continue;
        same_levels(day_convolve(xy, z), day_convolve(x, day_convolve(y, z)),
                    "associativity on " + corpus[i].name + ", " + corpus[j].name + ", " + corpus[k].name);
        ++assoc_cases;
      }
    }
  details["spaces"] = size;
  details["unit_cases"] = unit_cases;
  details["symmetry_pairs"] = symmetry_cases;
  details["oracle_pairs"] = oracle_cases;
  details["associativity_triples"] = assoc_cases;
  return t.verdict("iso", levels_range(n_max) + "; pairs and triples with generation product<=4");
}

// ---- A3: Yoneda and the Day adjunction ----

Verdict criterion_yoneda(const Config& cfg, json& details) {
  constexpr int kMax = 6;
  const auto spaces = tabulated_corpus(kMax, 2);
  std::vector<NamedPresented> sources;
  for (auto& p : presented_corpus(2))
    if (p.space.generation_bound() <= 1) sources.push_back(p);
  Tally t;
  json counts = json::array();
  for (const auto& y : spaces) {
    for (int n = 0; n <= kMax; ++n) {
      Budget budget = cfg.make_budget();
      const MappingSpace m = mapping_space(representable(n, y.space.dim_bound()), y.space, budget);
      t.require(yoneda_map(m, y.space, n).is_iso(),
                "Map(Gamma^" + std::to_string(n) + ", " + y.name + ") -> " + y.name + "(" + std::to_string(n) +
                    "+) is not an isomorphism");
    }
    for (int n = 1; n <= kMax; ++n) {
      Budget budget = cfg.make_budget();
      const InternalHom h = internal_hom(representable(n, y.space.dim_bound()), y.space, budget);
      for (const auto& x : sources) {
        Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
        const auto l = count_natural_maps(day_convolve(x.space, representable(n, y.space.dim_bound())), y.space, b1);
        const auto r = count_natural_maps(x.space, h.space, b2);
        t.require(l == r,
                  "adjunction count for X = " + x.name + ", Y = " + y.name + ", n = " + std::to_string(n) + ": " +
                      std::to_string(l) + " vs " + std::to_string(r));
        if (x.name == "G1" && n <= 2) counts.push_back(json{{"Y", y.name}, {"n", n}, {"maps", l}});
      }
    }
  }
  details["targets"] = spaces.size();
  details["sources"] = sources.size();
  details["sample_counts"] = counts;
  return t.verdict("iso", "n<=" + std::to_string(kMax));
}

// ---- A4: internal hom out of a representable ----

Verdict criterion_internal_hom(const Config& cfg, json& details) {
  const auto spaces = tabulated_corpus(6, 2);
  Tally t;
  int cases = 0;
  for (const auto& y : spaces)
    for (int n = 0; n <= 3; ++n) {
      Budget budget = cfg.make_budget();
      const InternalHom h = internal_hom(representable(n, y.space.dim_bound()), y.space, budget);
      const GammaSpaceMap c = internal_hom_comparison(h, y.space, n);
      const std::string what = "[Gamma^" + std::to_string(n) + ", " + y.name + "]";
      t.require(levelwise_iso(c), what + " is not levelwise isomorphic to the precomposed smash");
      t.absorb(check_naturality(c, std::min(3, h.space.level_bound())), what + " comparison naturality");
      ++cases;
    }
  details["cases"] = cases;
  return t.verdict("iso", "n<=3; naturality levels<=3");
}

// ---- A5: Segal condition ----

Verdict criterion_segal(const Config& cfg, json& details) {
  Tally t;
  for (int modulus : {2, 3}) {
    Budget budget = cfg.make_budget();
    t.absorb(segal_sweep(monoid_gamma_space(modulus, 6, 2), 6, SegalTier::iso, budget),
             "monoid Z/" + std::to_string(modulus));
  }
  Budget budget = cfg.make_budget();
  const Verdict g1 = segal_check(tabulate(representable(1, 2), 2), 1, 1, SegalTier::iso, budget);
  const bool counts = !g1.witness.is_null() && g1.witness.contains("source_cells") &&
                      g1.witness["source_cells"][0] == 3 && g1.witness["target_cells"][0] == 4;
  t.require(g1.fails() && counts, "Gamma^1 at (1,1) was expected to fail with 3 vs 4 vertices: " + g1.detail);
  details["gamma1_detail"] = g1.detail;
  details["gamma1_witness"] = g1.witness;
  return t.verdict("iso", "k+l<=6");
}

// ---- A6: unital part and normalization ----

Verdict criterion_normalization(const Config& cfg, json& details) {
  const auto spaces = tabulated_corpus(4, 2);
  constexpr int kLevels = 4;
  Tally t;
  for (const auto& x : spaces) {
    const UnitalPart u = unital_part(x.space);
    t.require(levelwise_mono(u.iota), "iota is not mono on " + x.name);
    const Normalization nz = normalize(x.space);
    const SimpSet& base = nz.space.value(0);
    t.require(base.cell_count(0) == 1 && base.total_cells() == 1, "normalization of " + x.name + " at level 0 is not a point");
    for (int n = 0; n <= kLevels; ++n) {
      t.require(nz.pushouts[n].inl == nz.eta.levels[n], "eta is not the pushout coprojection on " + x.name);
      // Oracle: collapsing the image of X(0+), a retract, removes its cells and adds one vertex.
      const SimpSet& xn = x.space.value(n);
      const SimpSet& x0 = x.space.value(0);
      const SimpSet& yn = nz.space.value(n);
      for (int k = 0; k <= std::min(xn.dim_bound(), yn.dim_bound()); ++k) {
        const int expected = xn.cell_count(k) - x0.cell_count(k) + (k == 0 ? 1 : 0);
        t.require(yn.cell_count(k) == expected, "normalized " + x.name + " level " + std::to_string(n) + " dim " +
                                                    std::to_string(k) + ": " + std::to_string(yn.cell_count(k)) +
                                                    " cells, expected " + std::to_string(expected));
      }
    }
    t.absorb(check_naturality(nz.eta, 3), "eta naturality on " + x.name);
    if (x.normalized) {
      t.require(levelwise_iso(normalization_counit(nz, x.space)), "counit is not an isomorphism on " + x.name);
    }
  }
  const auto normalized_pair = [&](const std::string& a, const std::string& b) {
    const auto find = [&](const std::string& name) {
      return std::find_if(spaces.begin(), spaces.end(), [&](const NamedTabulated& s) { return s.name == name; })->space;
    };
    Budget budget = cfg.make_budget();
    t.absorb(normalized_mapping_check(find(a), find(b), 2, budget), "nor-map-sp on " + a + ", " + b);
  };
  normalized_pair("Z2", "Z2");
  normalized_pair("Z2", "Z3");
  normalized_pair("G1", "Z2");
  normalized_pair("G1", "G2");
  normalized_pair("terminal", "Z3");
  normalized_pair("Z2", "BZ2");
  details["spaces"] = spaces.size();
  details["mapping_pairs"] = 6;
  return t.verdict("iso", levels_range(kLevels) + "; mapping spaces levels<=2");
}

// ---- A7: relative nerve ----

Verdict criterion_relative_nerve(const Config& cfg, json& details) {
  Tally t;
  int fibers = 0;
  for (const auto& d : diagram_corpus()) {
    Budget budget = cfg.make_budget();
    const RelativeNerve rn = relative_nerve(d.input, d.dim_cap, budget);
    for (int o = 0; o < d.input.base.object_count(); ++o) {
      const Sub f = fiber(rn, o);
      t.require(fiber_to_value(rn, f, d.input, o).is_iso(),
                "fiber of " + d.name + " over " + d.input.base.object(o) + " is not the value");
      ++fibers;
    }
    for (int n = 0; n <= std::min(2, d.dim_cap); ++n) {
      Budget b = cfg.make_budget();
      const auto brute = relative_nerve_count(d.input, n, b);
      t.require(static_cast<std::uint64_t>(rn.total.size(n)) == brute,
                d.name + ": " + std::to_string(rn.total.size(n)) + " simplices in dim " + std::to_string(n) +
                    ", direct count " + std::to_string(brute));
    }
    const auto edges = relative_nerve_edge_count(d.input);
    t.require(static_cast<std::uint64_t>(rn.total.size(1)) == edges,
              d.name + ": edge inventory " + std::to_string(edges) + " vs " + std::to_string(rn.total.size(1)));
  }
  int constants = 0;
  for (const auto& c : category_corpus()) {
    if (c.cat.object_count() > 3) continue;
    Budget budget = cfg.make_budget();
    const RelativeNerve rn = relative_nerve(constant_diagram(c.cat, point(3)), 3, budget);
    t.absorb(iso(rn.total, nerve(c.cat, 3), cfg), "constant point diagram over " + c.name);
    ++constants;
  }
  details["fibers"] = fibers;
  details["constant_diagrams"] = constants;
  return t.verdict("iso", "dims<=3; counts n<=2");
}

// ---- A8: coCartesian edges ----

Verdict criterion_cocartesian(const Config& cfg, json& details) {
  Tally t;
  json per = json::array();
  for (const auto& d : diagram_corpus()) {
    if (!d.category_valued || d.input.base.object_count() > 3) continue;
    Budget budget = cfg.make_budget();
    const RelativeNerve rn = relative_nerve(d.input, 3, budget);
    Budget b = cfg.make_budget();
    const CocartesianResult r = cocartesian_edges(rn.proj, 3, b);
    t.absorb(r.detection, d.name + " detection");
    t.absorb(cocartesian_crosscheck(rn, d.input, r, cfg.word_cap), d.name);
    per.push_back(json{{"diagram", d.name}, {"edges", rn.total.size(1)}, {"cocartesian", r.edges.size()}});
  }
  details["diagrams"] = per;
  return t.verdict("exact", "horns dim<=3");
}

// ---- A9: symmetric monoidal quasi-categories ----

Verdict criterion_sm_qcat(const Config& cfg, json& details) {
  constexpr int kLevel = 4;
  struct Case {
    std::string name;
    TabulatedGammaSpace space;
    bool expect_holds;
  };
  const std::vector<Case> cases = {
      {"Z2", monoid_gamma_space(2, kLevel, 1), true},
      {"G1", tabulate(representable(1, 1), kLevel), false},
      {"terminal", terminal_gamma_space(kLevel, 1), true},
      {"const2", constant_gamma_space(discrete(2, 1), kLevel), false},
  };
  Tally t;
  json per = json::array();
  for (const auto& c : cases) {
    const RelativeNerveInput in = gamma_diagram(c.space, kLevel);
    Budget budget = cfg.make_budget();
    const RelativeNerve rn = relative_nerve(in, 1, budget);
    Budget b = cfg.make_budget();
    const SmQcatResult r = sm_qcat_check(rn, in, SegalTier::iso, kLevel, b, cfg.word_cap);
    Budget b2 = cfg.make_budget();
    const Verdict direct = segal_sweep(c.space, kLevel, SegalTier::iso, b2, cfg.word_cap);
    t.require(r.verdict.holds() == c.expect_holds,
              c.name + ": sm_qcat " + to_string(r.verdict.status) + (r.verdict.detail.empty() ? "" : " (" + r.verdict.detail + ")"));
    t.require(r.verdict.status == direct.status, c.name + ": sm_qcat and segal_check disagree");
    for (int k = 1; k < kLevel; ++k)
      for (int l = 1; k + l <= kLevel; ++l) {
        Budget b3 = cfg.make_budget(), b4 = cfg.make_budget();
        const Verdict a = segal_check(r.fibers, k, l, SegalTier::iso, b3, cfg.word_cap);
        const Verdict e = segal_check(c.space, k, l, SegalTier::iso, b4, cfg.word_cap);
        t.require(a.status == e.status, c.name + ": fibers and space disagree at (" + std::to_string(k) + "," +
                                            std::to_string(l) + ")");
      }
    per.push_back(json{{"space", c.name}, {"sm_qcat", to_string(r.verdict.status)}, {"segal", to_string(direct.status)}});
  }
  details["cases"] = per;
  return t.verdict("iso", "k+l<=" + std::to_string(kLevel));
}

// ---- A10: homotopy-theoretic identities ----

std::vector<SimpMap> standard_monos(int d) {
  const SimpSet i = standard_simplex(1, d);
  return {boundary_inclusion(1, d),
          boundary_inclusion(2, d),
          horn_inclusion(2, 0, d),
          horn_inclusion(2, 1, d),
          horn_inclusion(2, 2, d),
          SimpMap(empty_set(d), point(d), std::vector<std::vector<int>>(d + 1)),
          SimpMap(empty_set(d), i, std::vector<std::vector<int>>(d + 1)),
          vertex_map(i, i.table_id(0, 0))};
}

Verdict criterion_homotopy(const Config& cfg, json& details) {
  Tally t;
  const auto monos = standard_monos(3);
  int pp = 0;
  for (const auto& f : monos)
    for (const auto& g : monos) {
      t.require(pushout_product(f, g).is_mono(), "pushout-product of monos is not mono (case " + std::to_string(pp) + ")");
      ++pp;
    }
  const auto cats = category_corpus();
  for (const auto& c : cats) {
    const Sub j = j_qcat(nerve(c.cat, 3), cfg.word_cap);
    t.absorb(iso(j.set, nerve(max_subgroupoid(c.cat).cat, 3), cfg), "J(N(" + c.name + "))");
  }
  int exps = 0;
  for (const auto& c : cats)
    for (const auto& d : cats) {
      if (c.cat.object_count() * d.cat.object_count() > 4 || c.cat.arrow_count() > 6 || d.cat.arrow_count() > 6) continue;
      Budget budget = cfg.make_budget();
      const Exponential e = exponential(nerve(c.cat, 2), nerve(d.cat, 2), budget);
      Budget b = cfg.make_budget();
      const FunctorCategory fc = functor_category(d.cat, c.cat, b);
      t.absorb(iso(e.set, nerve(fc.cat, 2), cfg), "N(" + c.name + ")^N(" + d.name + ")");
      ++exps;
    }
  int pointed = 0;
  for (const auto& x : pointed_corpus(2)) {
    t.absorb(iso(smash(x.set, sphere0(2)), x.set, cfg), x.name + " smash S0");
    const SimpSet pt = point(2).with_basepoint(0);
    t.absorb(iso(smash(x.set, pt), pt, cfg), x.name + " smash point");
    ++pointed;
  }
  details["pushout_products"] = pp;
  details["categories"] = cats.size();
  details["exponentials"] = exps;
  details["pointed"] = pointed;
  return t.verdict("iso", "dims<=3");
}

// ---- A11: semiadditivity probe ----

Verdict criterion_semiadditivity(const Config& cfg, json& details) {
  const int n_max = cfg.level_bound;
  Tally t;
  json per = json::array();
  for (const auto& x : presented_corpus(2)) {
    Budget budget = cfg.make_budget();
    const SemiadditivityReport r = semiadditivity_probe(x.space, n_max, budget);
    t.absorb(r.coproduct, x.name + " coproduct comparison");
    if (r.product.status == Status::inconclusive) t.inconclusive(x.name + ": " + r.product.detail);
    per.push_back(json{{"space", x.name}, {"coproduct", to_string(r.coproduct.status)}, {"product", to_string(r.product.status)}});
    if (x.name == "G1") {
      t.absorb(r.product, "Gamma^1 product comparison");
      for (const auto& level : r.levels) {
        const int n = level["level"];
        const int expected = (n + 1) * (n + 1);
        t.require(level["x_conv_gamma2"][0] == expected && level["x_times_x"][0] == expected,
                  "Gamma^1 level " + std::to_string(n) + " does not have " + std::to_string(expected) + " points");
      }
    }
  }
  details["spaces"] = per;
  return t.verdict("iso", levels_range(n_max));
}

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> all = {
      {"A1", "inert/active factorization is unique for levels<=4", "gamma-op/inert-active", 5, criterion_factorization},
      {"A2", "Day convolution is unital, symmetric, associative; coend oracle agrees", "day/monoidal", 60, criterion_day},
      {"A3", "Map(Gamma^n, Y) = Y(n+) and the Day adjunction counts", "map-space/yoneda", 30, criterion_yoneda},
      {"A4", "[Gamma^n, X] = X(n+ smash -)", "internal-hom/representable", 30, criterion_internal_hom},
      {"A5", "Segal condition: monoid passes, Gamma^1 fails at (1,1)", "segal/iso", 10, criterion_segal},
      {"A6", "unital part, normalization, counit, normalized mapping spaces", "normalize/pushout", 20,
       criterion_normalization},
      {"A7", "relative nerve fibers, constant diagrams, simplex inventory", "relative-nerve/fiber", 20,
       criterion_relative_nerve},
      {"A8", "coCartesian edges are exactly the invertible ones", "cocartesian/invertible", 60, criterion_cocartesian},
      {"A9", "sm_qcat agrees with the Segal check", "sm-qcat/segal", 30, criterion_sm_qcat},
      {"A10", "pushout-products, J of nerves, exponentials of nerves, smash units", "homotopy/nerve-identities", 60,
       criterion_homotopy},
      {"A11", "semiadditivity probe", "semiadditive/probe", 20, criterion_semiadditivity},
  };
  return all;
}

// ---- invariants ----

Verdict invariant_json_roundtrip(const Config&, json& details) {
  Tally t;
  std::vector<SimpSet> sets;
  for (const auto& x : pointed_corpus(2)) sets.push_back(x.set);
  for (const auto& c : category_corpus()) sets.push_back(nerve(c.cat, 2));
  for (const auto& s : sets) {
    const json j = io::to_json(s);
    t.require(io::to_json(io::simpset_from_json(j)) == j, "json round trip changed " + j.dump().substr(0, 80));
    t.require(simplicial_identities_hold(s), "simplicial identities fail");
  }
  for (const auto& c : category_corpus()) {
    const json j = io::to_json(c.cat);
    t.require(io::to_json(io::category_from_json(j)) == j, "category json round trip changed " + c.name);
  }
  details["sets"] = sets.size();
  return t.verdict("exact", "corpus");
}

Verdict invariant_tau1_nerve(const Config& cfg, json&) {
  Tally t;
  for (const auto& c : category_corpus()) {
    Budget budget = cfg.make_budget();
    t.absorb(category_iso_check(tau1(nerve(c.cat, 3), cfg.word_cap).cat, c.cat, budget).verdict, c.name);
  }
  return t.verdict("iso", "corpus");
}

Verdict invariant_segal_transport(const Config& cfg, json&) {
  Tally t;
  for (const auto& x : tabulated_corpus(6, 2)) {
    Budget budget = cfg.make_budget();
    if (!segal_sweep(x.space, 6, SegalTier::iso, budget).holds()) continue;
    Budget b = cfg.make_budget();
    t.absorb(segal_sweep(precompose_smash(x.space, 2), 3, SegalTier::iso, b), x.name + "(2+ smash -)");
  }
  return t.verdict("iso", "k+l<=3");
}

Verdict invariant_normalize_idempotent(const Config&, json&) {
  Tally t;
  for (const auto& x : tabulated_corpus(4, 2)) {
    const Normalization once = normalize(x.space);
    const Normalization twice = normalize(once.space);
    t.require(levelwise_iso(twice.eta), "normalize is not idempotent on " + x.name);
    const bool point_at_zero = x.space.value(0).total_cells() == 1;
    t.require(levelwise_iso(once.eta) == point_at_zero, "eta iso iff X(0+) is a point fails on " + x.name);
  }
  return t.verdict("iso", levels_range(4));
}

Verdict invariant_internal_hom_terminal(const Config& cfg, json&) {
  Tally t;
  const TabulatedGammaSpace term = terminal_gamma_space(6, 2);
  for (const auto& x : presented_corpus(2)) {
    if (x.space.generation_bound() > 2) continue;
    Budget budget = cfg.make_budget();
    const InternalHom h = internal_hom(x.space, term, budget);
    for (int n = 0; n <= h.space.level_bound(); ++n) t.absorb(iso(h.space.value(n), point(2), cfg), "[" + x.name + ", *]");
  }
  return t.verdict("iso", "levels<=3");
}

Verdict invariant_precompose_smash(const Config&, json&) {
  Tally t;
  const TabulatedGammaSpace p = precompose_smash(tabulate(representable(1, 2), 6), 2);
  for (int k = 0; k <= p.level_bound(); ++k)
    t.require(p.value(k).cell_count(0) == 2 * k + 1, "Gamma^1(2+ smash " + std::to_string(k) + "+) has " +
                                                         std::to_string(p.value(k).cell_count(0)) + " points");
  t.absorb(check_functoriality(p, p.level_bound()), "functoriality");
  return t.verdict("exact", levels_range(3));
}

Verdict invariant_homotopy_category(const Config& cfg, json&) {
  Tally t;
  Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
  t.absorb(category_iso_check(homotopy_category(monoid_gamma_space(2, 2, 2), cfg.word_cap), discrete_category(2), b1).verdict,
           "ho(Z2)");
  t.absorb(category_iso_check(homotopy_category(group_nerve_gamma_space(2, 2, 2), cfg.word_cap), cyclic_group(2), b2).verdict,
           "ho(BZ2)");
  return t.verdict("iso", "level 1");
}

Verdict invariant_trivial_fibration(const Config& cfg, json&) {
  Tally t;
  const TabulatedGammaSpace z = monoid_gamma_space(2, 3, 2);
  Budget b1 = cfg.make_budget();
  t.absorb(trivial_fibration_check(GammaSpaceMap{z, z, [&] {
                                                   std::vector<SimpMap> ls;
                                                   for (int n = 0; n <= 3; ++n) ls.push_back(SimpMap::identity(z.value(n)));
                                                   return ls;
                                                 }()},
                                   2, 2, b1),
           "identity of Z2");
  // Gamma^0 -> Gamma^1 misses points, so it cannot lift against the empty boundary.
  const PresentedMap inc{representable(0, 2), representable(1, 2),
                         {CellMap{0, GammaMorphism::zero(1, 0), SimpMap::identity(point(2))}}};
  Budget b2 = cfg.make_budget();
  const Verdict v = trivial_fibration_check(tabulate(inc, 3), 2, 2, b2);
  t.require(v.fails(), "Gamma^0 -> Gamma^1 was expected to fail: " + std::string(to_string(v.status)));
  return t.verdict("lifting", "levels<=2; dims<=2");
}

Verdict invariant_marked_adjunction(const Config& cfg, json& details) {
  Tally t;
  const SimpSet i = standard_simplex(1, 2);
  const std::vector<SimpSet> ks = {point(2), i, boundary(1, 2)};
  const std::vector<MarkedSimpSet> xs = {flat(i), sharp(i), sharp(point(2))};
  const std::vector<MarkedSimpSet> ys = {flat(nerve(walking_iso(), 2)), sharp(nerve(walking_iso(), 2)), flat(i)};
  int cases = 0;
  for (const auto& k : ks)
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (Marking variant : {Marking::flat, Marking::sharp}) {
          Budget budget = cfg.make_budget();
          const auto c = marked_adjunction_counts(k, x, y, variant, budget);
          t.require(c.left == c.right, "adjunction counts " + std::to_string(c.left) + " vs " + std::to_string(c.right));
          ++cases;
        }
  details["cases"] = cases;
  return t.verdict("exact", "dims<=2");
}

Verdict invariant_flat_mapping(const Config& cfg, json&) {
  Tally t;
  const std::vector<std::pair<TabulatedGammaSpace, TabulatedGammaSpace>> pairs = {
      {monoid_gamma_space(2, 2, 1), monoid_gamma_space(2, 2, 1)},
      {tabulate(representable(1, 1), 2), monoid_gamma_space(3, 2, 1)},
  };
  for (const auto& [x, y] : pairs) {
    Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
    const SimpSet m = marked_mapping_space(gamma_flat(x), gamma_flat(y), 2, b1);
    const SimpSet u = natural_mapping_space(x, y, 2, false, b2);
    t.absorb(iso(m, u, cfg), "flat marked mapping space");
  }
  return t.verdict("iso", levels_range(2));
}

Verdict invariant_cocartesian_fibration(const Config& cfg, json&) {
  Tally t;
  for (const auto& d : diagram_corpus()) {
    if (!d.category_valued) continue;
    Budget budget = cfg.make_budget();
    const RelativeNerve rn = relative_nerve(d.input, 3, budget);
    Budget b = cfg.make_budget();
    t.absorb(cocartesian_edges(rn.proj, 3, b).fibration, d.name);
  }
  return t.verdict("lifting", "dims<=3");
}

Verdict invariant_sm_cat_equiv(const Config& cfg, json&) {
  Tally t;
  const TabulatedGammaSpace bz = group_nerve_gamma_space(2, 2, 2);
  const RelativeNerveInput in = gamma_diagram(bz, 2);
  Budget budget = cfg.make_budget();
  const RelativeNerve rn = relative_nerve(in, 2, budget);
  Budget b = cfg.make_budget();
  t.absorb(sm_qcat_check(rn, in, SegalTier::cat_equiv, 2, b, cfg.word_cap).verdict, "BZ2");
  return t.verdict("cat-equiv", "k+l<=2");
}

Verdict invariant_over_base(const Config& cfg, json& details) {
  Tally t;
  const FinCat gop = gamma_op_category(1);
  const OverObject x = nelg(gop, 1, 2);
  const OverObject y = nelg(gop, 0, 2);
  Budget b0 = cfg.make_budget();
  const OverHom h = hom_over_base(x, y, b0);
  for (const SimpSet& a : {point(2), standard_simplex(1, 2), boundary(1, 2)}) {
    Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
    const auto left = count_over_base_maps(tensor_over_base(a, x), y, b1);
    const auto right = count_homs(a, h.exp.set, b2);
    t.require(left == right, "tensor/hom over the base: " + std::to_string(left) + " vs " + std::to_string(right));
  }
  const Upsilon u = upsilon(gamma_op_category(2), 1, 1, 2);
  t.require(u.map.then(u.target.proj) == u.source.proj, "upsilon does not commute with the projections");
  details["nelg1_vertices"] = x.total.set().size(0);
  return t.verdict("exact", "Gamma-op levels<=2");
}

std::vector<NamedSimpSet> quasi_categories() {
  return {{"D1", standard_simplex(1, 2)},
          {"D2", standard_simplex(2, 2)},
          {"N(I)", nerve(walking_iso(), 2)},
          {"N([1]xI)", nerve(product_category(ordinal_category(1), walking_iso()), 2)},
          {"N(Z/2)", nerve(cyclic_group(2), 2)}};
}

Verdict invariant_j_qcat(const Config& cfg, json&) {
  Tally t;
  for (const auto& x : quasi_categories()) {
    const Sub j = j_qcat(x.set, cfg.word_cap);
    const Sub jj = j_qcat(j.set, cfg.word_cap);
    t.require(jj.inclusion.is_iso(), "J is not idempotent on " + x.name);
    const Tau1 tj = tau1(j.set, cfg.word_cap);
    for (int e = 0; e < j.set.size(1); ++e) t.require(tj.cat.is_iso(tj.arrow_of_edge[e]), "J(" + x.name + ") has a non-invertible edge");
    t.require(j.inclusion.is_mono(), "J(" + x.name + ") is not a sub-simplicial set");
  }
  return t.verdict("exact", "dims<=2");
}

Verdict invariant_restricted_exp(const Config& cfg, json& details) {
  Tally t;
  int cases = 0;
  for (const auto& x : quasi_categories())
    for (const SimpSet& a : {point(2), standard_simplex(1, 2)}) {
      Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
      const RestrictedExp r = restricted_exp(x.set, a, b1, cfg.word_cap);
      const HomotopyMappingSpace h = h_map_space(a, x.set, b2, cfg.word_cap);
      // J of the restricted exponential is J(X^A) cut down to the vertices landing in J(X).
      const Sub jr = j_qcat(r.sub.set, cfg.word_cap);
      const auto lhs = image_ids(jr.inclusion.then(r.sub.inclusion));
      const auto hm = image_ids(h.sub.inclusion);
      const auto verts = image_ids(r.sub.inclusion)[0];
      const SimpSet& e = h.exp.set;
      for (int n = 0; n < static_cast<int>(hm.size()) && n < static_cast<int>(lhs.size()); ++n) {
        std::set<int> rhs;
        for (int s : hm[n]) {
          bool inside = true;
          for (int k = 0; k <= n && inside; ++k) inside = verts.count(e.vertex(n, s, k)) > 0;
          if (inside) rhs.insert(s);
        }
        t.require(lhs[n] == rhs, "J(X^(A)) and J(X^A) disagree on " + x.name + " in dim " + std::to_string(n));
      }
      const Sub jr_in_exp{jr.set, jr.inclusion.then(r.sub.inclusion)};
      t.require(is_contained(jr_in_exp, r.sub), "J(X^(A)) is not contained in X^(A)");
      ++cases;
    }
  // Vertices of P(X) = X^(Delta[1]) are the invertible edges.
  for (const auto& x : quasi_categories()) {
    Budget budget = cfg.make_budget();
    const RestrictedExp p = restricted_exp(x.set, standard_simplex(1, 2), budget, cfg.word_cap);
    const Tau1 tx = tau1(x.set, cfg.word_cap);
    int invertible = 0;
    for (int e = 0; e < x.set.size(1); ++e)
      if (tx.cat.is_iso(tx.arrow_of_edge[e])) ++invertible;
    t.require(p.sub.set.size(0) == invertible, "P(" + x.name + ") has " + std::to_string(p.sub.set.size(0)) +
                                                   " vertices, expected " + std::to_string(invertible));
  }
  details["cases"] = cases;
  return t.verdict("exact", "dims<=2");
}

Verdict invariant_h_map_nerve(const Config& cfg, json&) {
  Tally t;
  const std::vector<std::pair<FinCat, FinCat>> pairs = {
      {ordinal_category(1), walking_iso()}, {walking_iso(), ordinal_category(1)}, {discrete_category(2), cyclic_group(2)},
      {ordinal_category(1), ordinal_category(1)}};
  for (const auto& [d, c] : pairs) {
    Budget b1 = cfg.make_budget(), b2 = cfg.make_budget();
    const HomotopyMappingSpace h = h_map_space(nerve(d, 2), nerve(c, 2), b1, cfg.word_cap);
    const FunctorCategory fc = functor_category(d, c, b2);
    t.absorb(iso(h.sub.set, nerve(max_subgroupoid(fc.cat).cat, 2), cfg), "J(N(C)^N(D))");
  }
  // Along the equivalence I -> *, the homotopy mapping spaces have equivalent tau1.
  for (const FinCat& c : {ordinal_category(1), walking_iso(), cyclic_group(2)}) {
    Budget b1 = cfg.make_budget(), b2 = cfg.make_budget(), b3 = cfg.make_budget();
    const auto a = h_map_space(nerve(walking_iso(), 2), nerve(c, 2), b1, cfg.word_cap);
    const auto p = h_map_space(point(2), nerve(c, 2), b2, cfg.word_cap);
    t.absorb(equivalence_check(tau1(a.sub.set, cfg.word_cap).cat, tau1(p.sub.set, cfg.word_cap).cat, b3).verdict,
             "h_map_space along I -> *");
  }
  return t.verdict("iso", "dims<=2");
}

const std::vector<CriterionSpec>& invariants() {
  static const std::vector<CriterionSpec> all = {
      {"I1", "canonical JSON round trip and simplicial identities", "io/canonical", 0, invariant_json_roundtrip},
      {"I2", "tau1 inverts the nerve", "tau1/nerve", 0, invariant_tau1_nerve},
      {"I3", "Segal condition transports along n+ smash -", "segal/transport", 0, invariant_segal_transport},
      {"I4", "normalization is idempotent; eta iso iff X(0+) is a point", "normalize/idempotent", 0,
       invariant_normalize_idempotent},
      {"I5", "[X, *] is terminal", "internal-hom/terminal", 0, invariant_internal_hom_terminal},
      {"I6", "precomposition with 2+ smash - on Gamma^1", "precompose-smash/count", 0, invariant_precompose_smash},
      {"I7", "homotopy categories of Z2 and BZ2", "ho-cat/tau1", 0, invariant_homotopy_category},
      {"I8", "trivial fibration routes", "trivial-fibration/routes", 0, invariant_trivial_fibration},
      {"I9", "marked adjunctions", "marked/adjunction", 0, invariant_marked_adjunction},
      {"I10", "flat marked mapping spaces are mapping spaces", "marked/flat-mapping", 0, invariant_flat_mapping},
      {"I11", "relative nerves of category diagrams are coCartesian fibrations", "cocartesian/fibration", 0,
       invariant_cocartesian_fibration},
      {"I12", "sm_qcat at the cat-equiv tier on BZ2", "sm-qcat/cat-equiv", 0, invariant_sm_cat_equiv},
      {"I13", "tensor/hom adjunction over the base and upsilon", "over-base/adjunction", 0, invariant_over_base},
      {"I14", "J is idempotent and lands in Kan complexes", "homotopy/j", 0, invariant_j_qcat},
      {"I15", "restricted exponentials and homotopy mapping spaces", "homotopy/restricted-exp", 0,
       invariant_restricted_exp},
      {"I16", "homotopy mapping spaces of nerves", "homotopy/h-map", 0, invariant_h_map_nerve},
  };
  return all;
}

}  // namespace

// ---- corpus ----

std::vector<NamedPresented> presented_corpus(int d) {
  const SimpSet pt = point(d);
  const SimpSet i = standard_simplex(1, d);
  std::vector<NamedPresented> out;
  for (int k = 0; k <= 3; ++k) out.push_back({"G" + std::to_string(k), renamed(representable(k, d), "G" + std::to_string(k))});
  out.push_back({"G1xD1", tensor(1, i, "G1xD1")});
  out.push_back({"G1xdD2", tensor(1, boundary(2, d), "G1xdD2")});
  out.push_back({"G1xL21", tensor(1, horn(2, 1, d), "G1xL21")});
  out.push_back({"G2xD1", tensor(2, i, "G2xD1")});
  out.push_back({"G1+G1", renamed(coproduct(representable(1, d), representable(1, d)), "G1+G1")});
  out.push_back({"G0+G1", renamed(coproduct(representable(0, d), representable(1, d)), "G0+G1")});
  {
    std::vector<GammaCell> cells = {{1, pt, "a"}, {1, pt, "b"}, {0, pt, "o"}};
    std::vector<GammaGlue> glue = {{2, 0, GammaMorphism::zero(1, 0), SimpMap::identity(pt)},
                                   {2, 1, GammaMorphism::zero(1, 0), SimpMap::identity(pt)}};
    out.push_back({"G1vG1", PresentedGammaSpace(cells, glue, "G1vG1")});
  }
  {
    // Gamma^1 x Delta[1] with the end Gamma^1 x {1} collapsed to Gamma^0.
    std::vector<GammaCell> cells = {{1, pt, "end"}, {1, i, "cyl"}, {0, pt, "apex"}};
    std::vector<GammaGlue> glue = {{0, 1, GammaMorphism::identity(1), vertex_map(i, i.table_id(0, 1))},
                                   {0, 2, GammaMorphism::zero(0, 1), SimpMap::identity(pt)}};
    out.push_back({"cone", PresentedGammaSpace(cells, glue, "cone")});
  }
  return out;
}

std::vector<NamedTabulated> tabulated_corpus(int n, int d) {
  return {
      {"Z2", monoid_gamma_space(2, n, d), true},
      {"Z3", monoid_gamma_space(3, n, d), true},
      {"BZ2", group_nerve_gamma_space(2, n, d), true},
      {"terminal", terminal_gamma_space(n, d), true},
      {"G1", tabulate(representable(1, d), n), true},
      {"G2", tabulate(representable(2, d), n), true},
      {"const2", constant_gamma_space(discrete(2, d), n), false},
      {"G1xD1", tabulate(tensor(1, standard_simplex(1, d)), n), false},
      {"G0+G1", tabulate(coproduct(representable(0, d), representable(1, d)), n), false},
  };
}

std::vector<NamedCategory> category_corpus() {
  return {{"pt", terminal_category()},
          {"disc2", discrete_category(2)},
          {"[1]", ordinal_category(1)},
          {"[2]", ordinal_category(2)},
          {"I", walking_iso()},
          {"Z/2", cyclic_group(2)},
          {"Z/3", cyclic_group(3)},
          {"[1]xI", product_category(ordinal_category(1), walking_iso())}};
}

std::vector<NamedSimpSet> pointed_corpus(int d) {
  return {{"S0", sphere0(d)},
          {"pt", point(d).with_basepoint(0)},
          {"D1+", add_basepoint(standard_simplex(1, d))},
          {"dD2+", add_basepoint(boundary(2, d))},
          {"D1@0", standard_simplex(1, d).with_basepoint(0)},
          {"S1", one_edge_circle(d).with_basepoint(0)}};
}

CatFunctor functor_by_endpoints(const FinCat& c, const FinCat& d, const std::vector<int>& on_objects) {
  if (static_cast<int>(on_objects.size()) != c.object_count()) throw InputError("functor: wrong number of objects");
  CatFunctor f{on_objects, {}};
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    const auto& h = d.hom(on_objects[ar.src], on_objects[ar.dst]);
    if (h.size() != 1) throw InputError("functor: hom-set of the target is not a singleton");
    f.on_arrows.push_back(h[0]);
  }
  if (!is_functor(c, d, f)) throw InputError("functor: not functorial");
  return f;
}

std::vector<NamedDiagram> diagram_corpus() {
  std::vector<NamedDiagram> out;
  out.push_back({"const pt over [2]", constant_diagram(ordinal_category(2), point(3)), 3, true});
  out.push_back({"const D1 over [1]", constant_diagram(ordinal_category(1), standard_simplex(1, 3)), 3, true});
  out.push_back({"const D1 over I", constant_diagram(walking_iso(), standard_simplex(1, 3)), 2, true});
  {
    const FinCat base = ordinal_category(1);
    const std::vector<FinCat> cats = {ordinal_category(1), walking_iso()};
    std::vector<CatFunctor> fs;
    for (int a = 0; a < base.arrow_count(); ++a) {
      const auto& ar = base.arrow(a);
      fs.push_back(functor_by_endpoints(cats[ar.src], cats[ar.dst], {0, 1}));
    }
    out.push_back({"[1] -> I", category_diagram(base, cats, fs, 3), 3, true});
  }
  {
    const FinCat base = ordinal_category(1);
    const std::vector<FinCat> cats = {walking_iso(), terminal_category()};
    std::vector<CatFunctor> fs;
    for (int a = 0; a < base.arrow_count(); ++a) {
      const auto& ar = base.arrow(a);
      fs.push_back(ar.src == ar.dst ? identity_functor(cats[ar.src]) : functor_by_endpoints(cats[0], cats[1], {0, 0}));
    }
    out.push_back({"I -> pt", category_diagram(base, cats, fs, 3), 3, true});
  }
  {
    const FinCat base = cyclic_group(2);
    const FinCat two = discrete_category(2);
    std::vector<CatFunctor> fs;
    for (int a = 0; a < base.arrow_count(); ++a)
      fs.push_back(functor_by_endpoints(two, two, base.is_identity(a) ? std::vector<int>{0, 1} : std::vector<int>{1, 0}));
    out.push_back({"Z/2 swaps two points", category_diagram(base, {two}, fs, 3), 3, true});
  }
  {
    const FinCat base = ordinal_category(2);
    const std::vector<FinCat> cats = {ordinal_category(1), ordinal_category(1), walking_iso()};
    std::vector<CatFunctor> fs;
    for (int a = 0; a < base.arrow_count(); ++a) {
      const auto& ar = base.arrow(a);
      fs.push_back(functor_by_endpoints(cats[ar.src], cats[ar.dst], {0, 1}));
    }
    out.push_back({"[2] -> ([1], [1], I)", category_diagram(base, cats, fs, 3), 3, true});
  }
  out.push_back({"Z2 over Gamma-op<=2", gamma_diagram(monoid_gamma_space(2, 2, 1), 2), 1, false});
  out.push_back({"Gamma^1 over Gamma-op<=2", gamma_diagram(tabulate(representable(1, 1), 2), 2), 1, false});
  return out;
}

// ---- results ----

json CheckResult::to_json(bool with_timing) const {
  json j;
  j["id"] = id;
  j["title"] = title;
  j["tag"] = tag;
  j["verdict"] = verdict.to_json();
  j["ceiling_seconds"] = ceiling;
  if (with_timing) {
    j["seconds"] = seconds;
    j["within_ceiling"] = within_ceiling();
    j["passed"] = passed();
  } else {
    j["passed"] = verdict.holds();
  }
  if (!details.is_null() && !details.empty()) j["details"] = details;
  return j;
}

int criterion_count() { return static_cast<int>(criteria().size()); }

CheckResult run_criterion(int number, const Config& cfg) {
  if (number < 1 || number > criterion_count()) throw InputError("no acceptance criterion " + std::to_string(number));
  const CriterionSpec& s = criteria()[number - 1];
  return timed(s.id, s.title, s.tag, s.ceiling, [&](json& details) { return s.run(cfg, details); });
}

std::vector<CheckResult> run_acceptance(const Config& cfg) {
  std::vector<CheckResult> out;
  for (int k = 1; k <= criterion_count(); ++k) out.push_back(run_criterion(k, cfg));
  return out;
}

std::vector<CheckResult> run_invariants(const Config& cfg) {
  std::vector<CheckResult> out;
  for (const auto& s : invariants())
    out.push_back(timed(s.id, s.title, s.tag, s.ceiling, [&](json& details) { return s.run(cfg, details); }));
  return out;
}

int exit_code(const std::vector<CheckResult>& results) {
  bool inconclusive = false;
  for (const auto& r : results) {
    if (r.verdict.fails() || !r.within_ceiling()) return 1;
    if (r.verdict.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace gs::suite
