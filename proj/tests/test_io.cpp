#include <gtest/gtest.h>

#include <gammaspace/io.hpp>
#include <gammaspace/suite.hpp>

#include "support.hpp"

namespace gs {
namespace {

const json kHorn = json::parse(R"({
  "dim_bound": 2,
  "cells": {
    "0": [{"id": "a", "faces": []}, {"id": "b", "faces": []}, {"id": "c", "faces": []}],
    "1": [{"id": "f", "faces": ["b", "a"]}, {"id": "g", "faces": ["c", "b"]}]
  }
})");

TEST(SimpSetJson, CanonicalRoundTrip) {
  const SimpSet x = io::simpset_from_json(kHorn);
  EXPECT_EQ(x.cell_counts(), (std::vector<int>{3, 2, 0}));
  const json out = io::to_json(x);
  EXPECT_EQ(io::to_json(io::simpset_from_json(out)), out);
  EXPECT_EQ(io::simpset_from_json(out), x);
  for (const SimpSet& s : {standard_simplex(2, 3), nerve(cyclic_group(2), 2), sphere0(2)})
    EXPECT_EQ(io::simpset_from_json(io::to_json(s)), s);
}

TEST(SimpSetJson, DegenerateRefs) {
  // A 2-cell with a degenerate face: s_0 a.
  json j = json::parse(R"({
    "dim_bound": 2,
    "cells": {
      "0": [{"id": "a", "faces": []}],
      "1": [{"id": "e", "faces": ["a", "a"]}],
      "2": [{"id": "t", "faces": ["e", "e", {"base": "a", "deg": [0]}]}]
    }
  })");
  const SimpSet x = io::simpset_from_json(j);
  EXPECT_EQ(x.cell_count(2), 1);
  const int d = x.face(2, x.table_id(2, 0), 2);
  EXPECT_EQ(x.cell_of(1, d), -1);
  EXPECT_EQ(io::ref_from_json(x, 1, io::ref_to_json(x, 1, d)), d);
  EXPECT_EQ(io::ref_to_json(x, 1, x.table_id(1, 0)), "e");
}

TEST(SimpSetJson, RejectsBadInput) {
  json missing = kHorn;
  missing["cells"]["1"][0]["faces"] = {"b", "z"};
  EXPECT_THROW(io::simpset_from_json(missing), InputError);
  json wrong_arity = kHorn;
  wrong_arity["cells"]["1"][0]["faces"] = {"b"};
  EXPECT_THROW(io::simpset_from_json(wrong_arity), InputError);
  json duplicate = kHorn;
  duplicate["cells"]["0"][1]["id"] = "a";
  EXPECT_THROW(io::simpset_from_json(duplicate), InputError);
  EXPECT_THROW(io::simpset_from_json(json::parse(R"({"cells": {}})")), InputError);
}

TEST(CategoryJson, RoundTripAndIdentities) {
  for (const auto& c : suite::category_corpus()) {
    const FinCat back = io::category_from_json(io::to_json(c.cat));
    Budget budget = testing::big_budget();
    EXPECT_TRUE(category_iso_check(back, c.cat, budget).verdict.holds()) << c.name;
    EXPECT_EQ(io::to_json(back), io::to_json(c.cat));
  }
  json bad = io::to_json(ordinal_category(1));
  bad["identities"] = json::object();
  EXPECT_THROW(io::category_from_json(bad), InputError);
}

TEST(TabulatedJson, RoundTripPreservesTheAction) {
  for (const TabulatedGammaSpace& x : {monoid_gamma_space(2, 3, 2), group_nerve_gamma_space(2, 3, 2),
                                       tabulate(suite::presented_corpus(2)[4].space, 3)}) {
    const TabulatedGammaSpace back = io::tabulated_from_json(io::to_json(x));
    ASSERT_EQ(back.level_bound(), x.level_bound());
    // Input sorts cells by id, so compare through ids rather than table positions.
    EXPECT_EQ(io::to_json(back), io::to_json(x));
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(io::to_json(back.value(n)), io::to_json(x.value(n)));
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (const auto& f : enumerate_homs(a, b)) EXPECT_EQ(io::to_json(back.act(f)), io::to_json(x.act(f))) << f.name();
  }
}

TEST(TabulatedJson, MissingGeneratorIsAnInputError) {
  json j = io::to_json(monoid_gamma_space(2, 2, 1));
  ASSERT_FALSE(j["action"].empty());
  // Identities may be omitted; drop a non-identity generator instead.
  auto& action = j["action"];
  for (auto it = action.begin(); it != action.end(); ++it) {
    const GammaMorphism f = GammaMorphism::from_json((*it)["map"]);
    if (f.src != f.dst || f != GammaMorphism::identity(f.src)) {
      action.erase(it);
      break;
    }
  }
  EXPECT_THROW(io::tabulated_from_json(j), InputError);
}

TEST(TabulatedJson, GeneratorsAreInertOrInjectiveOrSurjective) {
  for (const auto& f : io::tabulation_generators(3)) {
    if (f.is_inert()) continue;
    ASSERT_TRUE(f.is_active());
    std::vector<int> hits(f.dst + 1, 0);
    for (int v : f.map) ++hits[v];
    bool injective = true, surjective = true;
    for (int i = 1; i <= f.dst; ++i) {
      injective = injective && hits[i] <= 1;
      surjective = surjective && hits[i] >= 1;
    }
    EXPECT_TRUE(injective || surjective) << f.name();
  }
}

TEST(PresentedJson, RoundTrip) {
  for (const auto& x : suite::presented_corpus(2)) {
    const json j = io::to_json(x.space);
    const PresentedGammaSpace back = io::presented_from_json(j);
    EXPECT_EQ(io::to_json(back), j) << x.name;
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(testing::isomorphic(evaluate(back, n), evaluate(x.space, n))) << x.name;
  }
}

TEST(MarkedJson, RoundTrip) {
  const MarkedSimpSet s = sharp(nerve(walking_iso(), 2));
  EXPECT_EQ(io::marked_from_json(io::to_json(s)), s);
  const MarkedSimpSet f = flat(standard_simplex(2, 2));
  EXPECT_EQ(io::marked_from_json(io::to_json(f)), f);
}

TEST(RelativeNerveJson, RoundTripAndOptionalIdentities) {
  for (const auto& d : suite::diagram_corpus()) {
    const json j = io::to_json(d.input);
    const RelativeNerveInput back = io::relative_nerve_input_from_json(j);
    EXPECT_EQ(io::to_json(back), j) << d.name;
    EXPECT_NO_THROW(validate(back));
  }
}

TEST(OverObjectJson, RoundTrip) {
  const OverObject x = nelg(gamma_op_category(1), 1, 2);
  const OverObject back = io::over_object_from_json(io::to_json(x), x.proj.target());
  EXPECT_EQ(io::to_json(back), io::to_json(x));
  EXPECT_EQ(back.total.nondegenerate_marked_count(), x.total.nondegenerate_marked_count());
}

TEST(SimpMapJson, RoundTrip) {
  const SimpMap f = boundary_inclusion(2, 2);
  const SimpMap back = io::simpmap_from_json(io::to_json(f), f.source(), f.target());
  EXPECT_EQ(back, f);
  json bad = io::to_json(f);
  bad["0"] = json::object();
  EXPECT_THROW(io::simpmap_from_json(bad, f.source(), f.target()), InputError);
}

}  // namespace
}  // namespace gs
