#include "catcolim/localize.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catcolim;
using fixtures::w;

TEST_CASE("invert with no targets returns the same presentation object") {
  auto cat = fixtures::walking_arrow();
  LocalizationResult L = invert(cat, std::vector<int>{});
  CHECK(L.localized == cat);
  CHECK(is_identity_functor(L.quotient));
}

TEST_CASE("inverting the walking arrow gives the walking isomorphism") {
  auto cat = fixtures::walking_arrow();
  LocalizationResult L = invert(cat, {"d"});
  auto eng = engine_for(L.localized);
  CHECK(eng->eq_verdict(w(L.localized, "d.d^-1"), identity_word(0)) == Verdict::equal);
  auto rep = enumerate_arrows(L.localized);
  REQUIRE(rep.verdict == Finiteness::finite);
  CHECK(rep.arrow_count == 4);  // two identities and the mutually inverse pair
  CHECK(presentations_isomorphic(*L.localized, *fixtures::walking_iso()));
  CHECK(check_functor(L.quotient).ok());
}

TEST_CASE("inverting the free loop is group-like and infinite") {
  LocalizationResult L = invert(fixtures::free_loop(), {"l"});
  auto rep = enumerate_arrows(L.localized);
  CHECK(rep.verdict == Finiteness::cap_exceeded);
  // distinct powers stay distinct under the completed two-rule system
  auto eng = engine_for(L.localized);
  CHECK(eng->rs().complete);
  CHECK(eng->eq_verdict(w(L.localized, "l.l"), w(L.localized, "l")) ==
        Verdict::unequal);
  CHECK(eng->eq_verdict(w(L.localized, "l.l^-1"), identity_word(0)) ==
        Verdict::equal);
}

TEST_CASE("invert rejects unknown targets") {
  CHECK_THROWS_AS(invert(fixtures::walking_arrow(), {"zzz"}), error);
}

TEST_CASE("quotient inverts exactly the targets among generators") {
  // s is targeted; the idempotent endo t stays non-invertible, and the
  // localized category remains finite so this is decidable
  auto cat = [] {
    FpCategoryBuilder b("ArrowIdem");
    b.object("a").object("b").gen("s", "a", "b").gen("t", "b", "b");
    b.relation(b.word("t.t"), b.word("t"));
    return b.build();
  }();
  LocalizationResult L = invert(cat, {"s"});
  auto loc = L.localized;
  REQUIRE(enumerate_arrows(loc).verdict == Finiteness::finite);
  Verdict v;
  CHECK(find_inverse_arrow(loc, w(loc, "s"), {}, &v).has_value());
  auto none = find_inverse_arrow(loc, w(loc, "t"), {}, &v);
  CHECK(!none.has_value());
  CHECK(v == Verdict::unequal);
}

TEST_CASE("sigma with empty marking is the oplax total itself") {
  auto fx = fixtures::fx_walking_arrow();
  MarkedClass empty;
  empty.index = fx.F.index;
  SigmaColimResult S = sigma_bicolimit(fx.F, empty);
  CHECK(S.loc.localized == S.groth.total);
}

TEST_CASE("sigma over the marked walking arrow collapses to the point") {
  auto fx = fixtures::fx_walking_arrow();
  SigmaColimResult S = sigma_bicolimit(fx.F, fx.S);
  CHECK(presentations_isomorphic(*S.loc.localized, *fixtures::walking_iso()));
  EquivResult res = find_equivalence(S.loc.localized, fixtures::terminal());
  REQUIRE(res.found);
  CHECK(verify_witness(*res.witness).ok());
}

TEST_CASE("sigma over the marked parallel pair collapses to the point") {
  auto fx = fixtures::fx_parallel_pair();
  SigmaColimResult S = sigma_bicolimit(fx.F, fx.S);
  EquivResult res = find_equivalence(S.loc.localized, fixtures::terminal());
  REQUIRE(res.found);
  CHECK(verify_witness(*res.witness).ok());
}

TEST_CASE("sigma cocone cells are invertible over marked generators") {
  auto fx = fixtures::fx_chain3();
  SigmaColimResult S = sigma_bicolimit(fx.F, fx.S);
  for (size_t d = 0; d < S.cocone_cells.size(); ++d) {
    CHECK(S.cocone_cells[d].invertible());
    CHECK(check_natural(S.cocone_cells[d]).ok());
  }
  for (size_t i = 0; i < S.cocone.size(); ++i) CHECK(check_functor(S.cocone[i]).ok());
}

TEST_CASE("two out of three for invertible words") {
  auto cat = fixtures::loop_group();
  Word u = w(cat, "l");
  Word v = w(cat, "l.l");
  Word ui = w(cat, "l^-1");
  Word vi = w(cat, "l^-1.l^-1");
  Word uv = concat(*cat, u, v);
  Word uvi = word_inverse(*cat, uv);

  auto third = derive_inverse_two_of_three(cat, u, v, ui, vi, std::nullopt);
  REQUIRE(third.has_value());
  auto eng = engine_for(cat);
  CHECK(eng->eq_verdict(concat(*cat, uv, *third), identity_word(0)) == Verdict::equal);

  auto mid = derive_inverse_two_of_three(cat, u, v, ui, std::nullopt, uvi);
  REQUIRE(mid.has_value());
  CHECK(eng->eq_verdict(concat(*cat, v, *mid), identity_word(0)) == Verdict::equal);

  auto first = derive_inverse_two_of_three(cat, u, v, std::nullopt, vi, uvi);
  REQUIRE(first.has_value());
  CHECK(eng->eq_verdict(concat(*cat, *first, u), identity_word(0)) == Verdict::equal);
}

TEST_CASE("deweighting with the terminal weight matches full marking exactly") {
  for (const auto& fx : fixtures::pipeline_fixtures()) {
    WeightPresentation W = fixtures::terminal_weight(fx.F.index);
    WeightedColimResult wc = weighted_bicolimit(fx.F, W);
    std::vector<int> all;
    for (size_t d = 0; d < fx.F.index->generators.size(); ++d)
      all.push_back(static_cast<int>(d));
    MarkedClass full{fx.F.index, all};
    SigmaColimResult sc = sigma_bicolimit(fx.F, full);
    CHECK(presentations_isomorphic(*wc.sigma.loc.localized, *sc.loc.localized));
  }
}

TEST_CASE("copower by the walking isomorphism is the base category") {
  for (const auto& base : {fixtures::walking_arrow(), fixtures::discrete2()}) {
    DiagramOfCategories F = fixtures::constant_diagram(base);
    WeightPresentation W = fixtures::constant_weight(fixtures::walking_iso());
    WeightedColimResult wc = weighted_bicolimit(F, W);
    EquivResult res = find_equivalence(wc.sigma.loc.localized, base);
    REQUIRE(res.found);
    CHECK(verify_witness(*res.witness).ok());
  }
}

TEST_CASE("copower by the discrete pair doubles the base category") {
  DiagramOfCategories F = fixtures::constant_diagram(fixtures::walking_arrow());
  WeightPresentation W = fixtures::constant_weight(fixtures::discrete2());
  WeightedColimResult wc = weighted_bicolimit(F, W);
  auto doubled = FpCategoryBuilder("ArrTwice")
                     .object("a0")
                     .object("b0")
                     .object("a1")
                     .object("b1")
                     .gen("d0", "a0", "b0")
                     .gen("d1", "a1", "b1")
                     .build();
  EquivResult res = find_equivalence(wc.sigma.loc.localized, doubled);
  REQUIRE(res.found);
  CHECK(verify_witness(*res.witness).ok());
}

TEST_CASE("weighted bicolimit rejects mismatched indices") {
  auto fx = fixtures::fx_walking_arrow();
  WeightPresentation W = fixtures::terminal_weight(fixtures::discrete2());
  CHECK_THROWS_AS(weighted_bicolimit(fx.F, W), error);
}
