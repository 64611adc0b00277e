#include "catcolim/codescent.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catcolim {

namespace {

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() < b.letters.size();
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return shortlex_less(a, b);
  }
};

std::string square_key(int src, int dst, const std::string& l0,
                       const std::string& l1) {
  return std::to_string(src) + ">" + std::to_string(dst) + ";" + l0 + "|" + l1;
}

}  // namespace

// ---- square category --------------------------------------------------------

int SquareCategory::object_of_identity(int base_obj) const {
  return id_object_[static_cast<size_t>(base_obj)];
}

Word SquareCategory::arrow(int src_obj, int dst_obj, const Word& l0,
                           const Word& l1) const {
  if (src_obj == dst_obj && l0.is_identity() && l1.is_identity())
    return identity_word(src_obj);
  auto it = square_lookup_.find(
      square_key(src_obj, dst_obj, word_name(*base, l0), word_name(*base, l1)));
  if (it == square_lookup_.end())
    throw error(errc::undecided,
                "no recognized square " + word_name(*base, arrows[static_cast<size_t>(src_obj)]) +
                    " -> " + word_name(*base, arrows[static_cast<size_t>(dst_obj)]) +
                    " with legs " + word_name(*base, l0) + ", " + word_name(*base, l1));
  Word w;
  w.src = src_obj;
  w.dst = dst_obj;
  w.letters.push_back(Letter{it->second, false});
  return w;
}

SquareCategory build_square_category(const CatPtr& base, const MarkedClass& S,
                                     const Caps& caps) {
  if (S.index != base)
    throw error(errc::index_mismatch, "marked class lives on a different category");
  auto en = enumeration_for(base, caps);
  if (en->verdict != Finiteness::finite)
    throw error(errc::index_not_finite, "marked closure needs a finite category");
  auto eng = engine_for(base, caps);

  auto canon = [&](const Word& w) {
    auto c = canonical_arrow(base, w, caps);
    if (!c) throw error(errc::undecided, "arrow class of " + word_name(*base, w) +
                                             " could not be resolved");
    return *c;
  };

  // closure: identities and composites of marked generators
  std::set<Word, WordLess> closure;
  std::vector<Word> work;
  for (size_t o = 0; o < base->objects.size(); ++o) {
    Word id = identity_word(static_cast<int>(o));
    closure.insert(id);
    work.push_back(id);
  }
  for (int d : S.marked) {
    Word w;
    w.src = base->generators[static_cast<size_t>(d)].src;
    w.dst = base->generators[static_cast<size_t>(d)].dst;
    w.letters.push_back(Letter{d, false});
    Word c = canon(w);
    if (closure.insert(c).second) work.push_back(c);
  }
  while (!work.empty()) {
    Word w = work.back();
    work.pop_back();
    std::vector<Word> snapshot(closure.begin(), closure.end());
    for (const auto& v : snapshot) {
      for (const auto& [a, b] : {std::pair<const Word&, const Word&>{w, v},
                                 std::pair<const Word&, const Word&>{v, w}}) {
        if (a.dst != b.src) continue;
        Word c = canon(concat(*base, a, b));
        if (closure.insert(c).second) work.push_back(c);
      }
    }
  }

  SquareCategory SQ;
  SQ.base = base;
  SQ.arrows.assign(closure.begin(), closure.end());
  SQ.id_object_.assign(base->objects.size(), -1);
  FpCategoryBuilder b("squares(" + base->label + ")");
  for (size_t o = 0; o < SQ.arrows.size(); ++o) {
    b.object(word_name(*base, SQ.arrows[o]));
    if (SQ.arrows[o].is_identity())
      SQ.id_object_[static_cast<size_t>(SQ.arrows[o].src)] = static_cast<int>(o);
  }

  int n_gen = 0;
  std::vector<std::pair<int, int>> ends;  // per square generator
  for (size_t u = 0; u < SQ.arrows.size(); ++u) {
    for (size_t v = 0; v < SQ.arrows.size(); ++v) {
      const Word& au = SQ.arrows[u];
      const Word& av = SQ.arrows[v];
      for (const auto& l0 : en->hom(au.src, av.src)) {
        for (const auto& l1 : en->hom(au.dst, av.dst)) {
          if (u == v && l0.is_identity() && l1.is_identity()) continue;
          Verdict ok =
              eng->eq_verdict(concat(*base, l0, av), concat(*base, au, l1));
          if (ok == Verdict::unknown)
            throw error(errc::undecided, "square commutativity undecided");
          if (ok != Verdict::equal) continue;
          std::string nm = "sq{" + word_name(*base, au) + "->" +
                           word_name(*base, av) + ";" + word_name(*base, l0) +
                           "|" + word_name(*base, l1) + "}";
          b.gen(nm, word_name(*base, au), word_name(*base, av));
          SQ.legs.emplace_back(l0, l1);
          ends.emplace_back(static_cast<int>(u), static_cast<int>(v));
          SQ.square_lookup_[square_key(static_cast<int>(u), static_cast<int>(v),
                                       word_name(*base, l0), word_name(*base, l1))] =
              n_gen++;
        }
      }
    }
  }

  // composition table; needs the generator list fixed, so collect first
  struct Pending {
    Word lhs, rhs;
  };
  std::vector<Pending> rels;
  for (int g1 = 0; g1 < n_gen; ++g1) {
    for (int g2 = 0; g2 < n_gen; ++g2) {
      if (ends[static_cast<size_t>(g1)].second != ends[static_cast<size_t>(g2)].first)
        continue;
      Word c0 = canon(concat(*base, SQ.legs[static_cast<size_t>(g1)].first,
                             SQ.legs[static_cast<size_t>(g2)].first));
      Word c1 = canon(concat(*base, SQ.legs[static_cast<size_t>(g1)].second,
                             SQ.legs[static_cast<size_t>(g2)].second));
      Word rhs = SQ.arrow(ends[static_cast<size_t>(g1)].first,
                          ends[static_cast<size_t>(g2)].second, c0, c1);
      Word lhs;
      lhs.src = ends[static_cast<size_t>(g1)].first;
      lhs.dst = ends[static_cast<size_t>(g2)].second;
      lhs.letters = {Letter{g1, false}, Letter{g2, false}};
      rels.push_back(Pending{lhs, rhs});
    }
  }
  for (const auto& r : rels) b.relation(r.lhs, r.rhs);
  SQ.sq = b.build();
  return SQ;
}

// ---- triangle category -------------------------------------------------------

TriangleCategory build_triangle_category(const SquareCategory& SQ, const Caps& caps) {
  const CatPtr& base = SQ.base;
  auto en = enumeration_for(base, caps);
  auto canon = [&](const Word& w) {
    auto c = canonical_arrow(base, w, caps);
    if (!c) throw error(errc::undecided, "arrow class could not be resolved");
    return *c;
  };
  auto arrow_index = [&](const Word& w) {
    for (size_t o = 0; o < SQ.arrows.size(); ++o)
      if (SQ.arrows[o] == w) return static_cast<int>(o);
    throw error(errc::undecided, "composite left the marked closure");
  };

  TriangleCategory TR;
  TR.base = base;
  FpCategoryBuilder b("triangles(" + base->label + ")");
  for (size_t u = 0; u < SQ.arrows.size(); ++u) {
    for (size_t v = 0; v < SQ.arrows.size(); ++v) {
      if (SQ.arrows[u].dst != SQ.arrows[v].src) continue;
      Word w = canon(concat(*base, SQ.arrows[u], SQ.arrows[v]));
      TR.triangles.push_back(TriangleCategory::Triangle{
          static_cast<int>(u), static_cast<int>(v), arrow_index(w)});
      b.object("tr{" + word_name(*base, SQ.arrows[u]) + ";" +
               word_name(*base, SQ.arrows[v]) + "}");
    }
  }

  auto has_square = [&](int su, int sv, const Word& l0, const Word& l1) {
    if (su == sv && l0.is_identity() && l1.is_identity()) return true;
    return SQ.square_lookup_.count(square_key(
               su, sv, word_name(*base, l0), word_name(*base, l1))) > 0;
  };

  int n_gen = 0;
  std::map<std::string, int> tri_lookup;
  auto tri_key = [&](int t, int t2, const Word& a, const Word& bb, const Word& c) {
    return std::to_string(t) + ">" + std::to_string(t2) + ";" +
           word_name(*base, a) + "|" + word_name(*base, bb) + "|" +
           word_name(*base, c);
  };
  std::vector<std::pair<int, int>> ends;
  for (size_t t = 0; t < TR.triangles.size(); ++t) {
    for (size_t t2 = 0; t2 < TR.triangles.size(); ++t2) {
      const auto& A = TR.triangles[t];
      const auto& B = TR.triangles[t2];
      const Word& u = SQ.arrows[static_cast<size_t>(A.first)];
      const Word& u2 = SQ.arrows[static_cast<size_t>(B.first)];
      const Word& v = SQ.arrows[static_cast<size_t>(A.second)];
      const Word& v2 = SQ.arrows[static_cast<size_t>(B.second)];
      for (const auto& a : en->hom(u.src, u2.src)) {
        for (const auto& bb : en->hom(u.dst, u2.dst)) {
          if (!has_square(A.first, B.first, a, bb)) continue;
          for (const auto& c : en->hom(v.dst, v2.dst)) {
            if (!has_square(A.second, B.second, bb, c)) continue;
            if (t == t2 && a.is_identity() && bb.is_identity() && c.is_identity())
              continue;
            std::string nm = "tr3{" + std::to_string(t) + "->" +
                             std::to_string(t2) + ";" + word_name(*base, a) + "|" +
                             word_name(*base, bb) + "|" + word_name(*base, c) + "}";
            b.gen(nm, "tr{" + word_name(*base, u) + ";" + word_name(*base, v) + "}",
                  "tr{" + word_name(*base, u2) + ";" + word_name(*base, v2) + "}");
            TR.legs.push_back({a, bb, c});
            ends.emplace_back(static_cast<int>(t), static_cast<int>(t2));
            tri_lookup[tri_key(static_cast<int>(t), static_cast<int>(t2), a, bb, c)] =
                n_gen++;
          }
        }
      }
    }
  }
  // composition table
  for (int g1 = 0; g1 < n_gen; ++g1) {
    for (int g2 = 0; g2 < n_gen; ++g2) {
      if (ends[static_cast<size_t>(g1)].second != ends[static_cast<size_t>(g2)].first)
        continue;
      Word a = canon(concat(*base, TR.legs[static_cast<size_t>(g1)][0],
                            TR.legs[static_cast<size_t>(g2)][0]));
      Word bb = canon(concat(*base, TR.legs[static_cast<size_t>(g1)][1],
                             TR.legs[static_cast<size_t>(g2)][1]));
      Word c = canon(concat(*base, TR.legs[static_cast<size_t>(g1)][2],
                            TR.legs[static_cast<size_t>(g2)][2]));
      int src_t = ends[static_cast<size_t>(g1)].first;
      int dst_t = ends[static_cast<size_t>(g2)].second;
      Word rhs;
      if (src_t == dst_t && a.is_identity() && bb.is_identity() && c.is_identity()) {
        rhs = identity_word(src_t);
      } else {
        auto it = tri_lookup.find(tri_key(src_t, dst_t, a, bb, c));
        if (it == tri_lookup.end())
          throw error(errc::undecided, "triangle composite not recognized");
        rhs.src = src_t;
        rhs.dst = dst_t;
        rhs.letters.push_back(Letter{it->second, false});
      }
      Word lhs;
      lhs.src = ends[static_cast<size_t>(g1)].first;
      lhs.dst = ends[static_cast<size_t>(g2)].second;
      lhs.letters = {Letter{g1, false}, Letter{g2, false}};
      b.relation(lhs, rhs);
    }
  }
  TR.tri = b.build();
  return TR;
}

// ---- induced functors between totals ------------------------------------------

namespace {

// functor between Grothendieck totals determined by a base assignment
// (object map, generator-to-word map) and fiberwise comparison functors;
// strict on objects by construction in every use
FunctorPresentation induced_total_functor(
    const GrothendieckResult& GS, const GrothendieckResult& GT,
    const std::vector<int>& h_obj, const std::vector<Word>& h_word,
    const std::vector<std::optional<Word>>& h_word_inv,
    const std::vector<FunctorPresentation>& kappa) {
  const FpCategory& I = *GS.diagram.index;
  FunctorPresentation T;
  T.source = GS.total;
  T.target = GT.total;
  T.object_map.resize(GS.obj_pair.size());
  for (size_t o = 0; o < GS.obj_pair.size(); ++o) {
    auto [i, x] = GS.obj_pair[o];
    T.object_map[o] = GT.obj_of[static_cast<size_t>(h_obj[static_cast<size_t>(i)])]
                               [static_cast<size_t>(kappa[static_cast<size_t>(i)].on_object(x))];
  }
  size_t n_gen = GS.total->generators.size();
  T.generator_map.resize(n_gen);
  T.inverse_map.assign(n_gen, std::nullopt);
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& fib = *GS.diagram.fibers[i];
    const FunctorPresentation& incl =
        GT.cocone_inclusions[static_cast<size_t>(h_obj[i])];
    for (size_t g = 0; g < fib.generators.size(); ++g) {
      Word gw;
      gw.src = fib.generators[g].src;
      gw.dst = fib.generators[g].dst;
      gw.letters.push_back(Letter{static_cast<int>(g), false});
      size_t slot = static_cast<size_t>(GS.vertical_gen[i][g]);
      T.generator_map[slot] = apply(incl, apply(kappa[i], gw));
      if (fib.is_inverted(static_cast<int>(g)))
        T.inverse_map[slot] = apply(incl, inverse_image(kappa[i], static_cast<int>(g)));
    }
  }
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    const FpCategory& fib = *GS.diagram.fibers[static_cast<size_t>(gd.src)];
    for (size_t x = 0; x < fib.objects.size(); ++x) {
      size_t slot = static_cast<size_t>(GS.transition_gen[d][x]);
      int kx = kappa[static_cast<size_t>(gd.src)].on_object(static_cast<int>(x));
      Word img = lift_word(GT, h_word[d], kx);
      if (I.is_inverted(static_cast<int>(d))) {
        if (word_flippable(*GT.total, img)) {
          T.inverse_map[slot] = word_inverse(*GT.total, img);
        } else if (h_word_inv.size() > d && h_word_inv[d]) {
          int end_fiber = GT.obj_pair[static_cast<size_t>(img.dst)].second;
          Word inv = lift_word(GT, *h_word_inv[d], end_fiber);
          if (inv.src != img.dst || inv.dst != img.src)
            throw error(errc::validation_error,
                        "inverse lift endpoints do not match");
          T.inverse_map[slot] = inv;
        }
      }
      T.generator_map[slot] = std::move(img);
    }
  }
  return T;
}

NatTransfo identity_cell(FunctorPresentation src, FunctorPresentation dst) {
  if (src.object_map != dst.object_map)
    throw error(errc::validation_error,
                "structural cell endpoints disagree on objects");
  NatTransfo t;
  for (int o : src.object_map) t.components.push_back(identity_word(o));
  t.inverse_components = t.components;
  t.src_fun = std::move(src);
  t.dst_fun = std::move(dst);
  return t;
}

}  // namespace

// ---- marked codescent diagram ---------------------------------------------------

MarkedCodescentResult build_marked_codescent(const DiagramOfCategories& F,
                                             const MarkedClass& S,
                                             const Caps& caps) {
  require_valid_diagram(F, caps);
  MarkedCodescentResult R;
  R.squares = build_square_category(F.index, S, caps);
  R.triangles = build_triangle_category(R.squares, caps);
  const SquareCategory& SQ = R.squares;
  const TriangleCategory& TR = R.triangles;
  const FpCategory& I = *F.index;

  R.g0 = oplax_colimit(F, caps);

  DiagramOfCategories F1;
  F1.index = SQ.sq;
  for (const auto& a : SQ.arrows)
    F1.fibers.push_back(F.fibers[static_cast<size_t>(a.src)]);
  for (const auto& legs : SQ.legs)
    F1.transitions.push_back(functor_along_word(F, legs.first));
  R.g1 = oplax_colimit(F1, caps);

  DiagramOfCategories F2;
  F2.index = TR.tri;
  for (const auto& t : TR.triangles)
    F2.fibers.push_back(
        F.fibers[static_cast<size_t>(SQ.arrows[static_cast<size_t>(t.first)].src)]);
  for (const auto& legs : TR.legs)
    F2.transitions.push_back(functor_along_word(F, legs[0]));
  R.g2 = oplax_colimit(F2, caps);

  auto canon = [&](const Word& w) {
    auto c = canonical_arrow(F.index, w, caps);
    if (!c) throw error(errc::undecided, "arrow class could not be resolved");
    return *c;
  };

  CodescentDiagram X;
  X.x0 = R.g0.total;
  X.x1 = R.g1.total;
  X.x2 = R.g2.total;

  {  // d0: (u, x) -> (dom u, x), squares project to their first leg
    std::vector<int> h_obj;
    for (const auto& a : SQ.arrows) h_obj.push_back(a.src);
    std::vector<Word> h_word;
    for (const auto& legs : SQ.legs) h_word.push_back(legs.first);
    std::vector<FunctorPresentation> kappa;
    for (const auto& a : SQ.arrows)
      kappa.push_back(identity_functor(F.fibers[static_cast<size_t>(a.src)]));
    X.d0 = induced_total_functor(R.g1, R.g0, h_obj, h_word, {}, kappa);
  }
  {  // d1: (u, x) -> (cod u, F(u)x), squares project to their second leg
    std::vector<int> h_obj;
    for (const auto& a : SQ.arrows) h_obj.push_back(a.dst);
    std::vector<Word> h_word;
    for (const auto& legs : SQ.legs) h_word.push_back(legs.second);
    std::vector<FunctorPresentation> kappa;
    for (const auto& a : SQ.arrows) kappa.push_back(functor_along_word(F, a));
    X.d1 = induced_total_functor(R.g1, R.g0, h_obj, h_word, {}, kappa);
  }
  {  // sec: (i, x) -> (id_i, x), index generator d to the (d,d) square
    std::vector<int> h_obj;
    for (size_t i = 0; i < I.objects.size(); ++i)
      h_obj.push_back(SQ.object_of_identity(static_cast<int>(i)));
    std::vector<Word> h_word;
    std::vector<std::optional<Word>> h_word_inv(I.generators.size(), std::nullopt);
    for (size_t d = 0; d < I.generators.size(); ++d) {
      Word dw;
      dw.src = I.generators[d].src;
      dw.dst = I.generators[d].dst;
      dw.letters.push_back(Letter{static_cast<int>(d), false});
      Word cd = canon(dw);
      h_word.push_back(SQ.arrow(SQ.object_of_identity(dw.src),
                                SQ.object_of_identity(dw.dst), cd, cd));
      if (I.is_inverted(static_cast<int>(d))) {
        Word ci = canon(word_inverse(I, dw));
        h_word_inv[d] = SQ.arrow(SQ.object_of_identity(dw.dst),
                                 SQ.object_of_identity(dw.src), ci, ci);
      }
    }
    std::vector<FunctorPresentation> kappa;
    for (size_t i = 0; i < I.objects.size(); ++i)
      kappa.push_back(identity_functor(F.fibers[i]));
    X.sec = induced_total_functor(R.g0, R.g1, h_obj, h_word, h_word_inv, kappa);
  }
  {  // p0, p1, p2
    std::vector<int> h0, h1, h2;
    for (const auto& t : TR.triangles) {
      h0.push_back(t.first);
      h1.push_back(t.composite);
      h2.push_back(t.second);
    }
    std::vector<Word> w0, w1, w2;
    for (size_t g = 0; g < TR.legs.size(); ++g) {
      const GenDecl& gd = TR.tri->generators[g];
      const auto& A = TR.triangles[static_cast<size_t>(gd.src)];
      const auto& B = TR.triangles[static_cast<size_t>(gd.dst)];
      const Word& a = TR.legs[g][0];
      const Word& bb = TR.legs[g][1];
      const Word& c = TR.legs[g][2];
      w0.push_back(SQ.arrow(A.first, B.first, a, bb));
      w1.push_back(SQ.arrow(A.composite, B.composite, a, c));
      w2.push_back(SQ.arrow(A.second, B.second, bb, c));
    }
    std::vector<FunctorPresentation> kid, kshift;
    for (const auto& t : TR.triangles) {
      kid.push_back(identity_functor(
          F.fibers[static_cast<size_t>(SQ.arrows[static_cast<size_t>(t.first)].src)]));
      kshift.push_back(
          functor_along_word(F, SQ.arrows[static_cast<size_t>(t.first)]));
    }
    X.p0 = induced_total_functor(R.g2, R.g1, h0, w0, {}, kid);
    X.p1 = induced_total_functor(R.g2, R.g1, h1, w1, {}, kid);
    X.p2 = induced_total_functor(R.g2, R.g1, h2, w2, {}, kshift);
  }

  X.n0 = identity_cell(compose(X.sec, X.d0), identity_functor(X.x0));
  X.n1 = identity_cell(compose(X.sec, X.d1), identity_functor(X.x0));
  X.th01 = identity_cell(compose(X.p0, X.d0), compose(X.p1, X.d0));
  X.th02 = identity_cell(compose(X.p0, X.d1), compose(X.p2, X.d0));
  X.th12 = identity_cell(compose(X.p1, X.d1), compose(X.p2, X.d1));

  R.X = std::make_shared<const CodescentDiagram>(std::move(X));
  return R;
}

// ---- nerve ---------------------------------------------------------------------

NerveResult nerve_codescent(const FunctorPresentation& f, const Caps& caps) {
  Report fr = check_functor(f, caps);
  if (!fr.ok())
    throw error(fr.has_unknown() ? errc::undecided : errc::validation_error,
                "nerve input is not a valid functor: " + fr.summary());
  const CatPtr& A = f.source;
  const CatPtr& B = f.target;
  auto enA = enumeration_for(A, caps);
  auto enB = enumeration_for(B, caps);
  if (enA->verdict != Finiteness::finite || enB->verdict != Finiteness::finite)
    throw error(errc::not_finite, "nerve needs finite source and target");
  auto engB = engine_for(B, caps);

  // invertible arrows of B with chosen inverses
  std::map<Word, Word, WordLess> iso;
  for (const auto& w : enB->normal_forms) {
    Verdict v;
    auto inv = find_inverse_arrow(B, w, caps, &v);
    if (inv) {
      iso.emplace(w, *inv);
    } else if (v == Verdict::unknown) {
      throw error(errc::undecided, "invertibility of " + word_name(*B, w) +
                                       " in the target is undecided");
    }
  }
  auto canonB = [&](const Word& w) {
    auto c = canonical_arrow(B, w, caps);
    if (!c) throw error(errc::undecided, "arrow class could not be resolved");
    return *c;
  };

  // objects of the iso-comma category f =~ f
  struct Obj1 {
    int a, a2;
    Word beta;
  };
  std::vector<Obj1> obj1;
  std::map<std::string, int> obj1_lookup;
  auto obj1_key = [&](int a, int a2, const Word& beta) {
    return std::to_string(a) + ";" + std::to_string(a2) + ";" + word_name(*B, beta);
  };
  for (size_t a = 0; a < A->objects.size(); ++a)
    for (size_t a2 = 0; a2 < A->objects.size(); ++a2)
      for (const auto& beta : enB->hom(f.on_object(static_cast<int>(a)),
                                       f.on_object(static_cast<int>(a2)))) {
        if (!iso.count(beta)) continue;
        obj1_lookup[obj1_key(static_cast<int>(a), static_cast<int>(a2), beta)] =
            static_cast<int>(obj1.size());
        obj1.push_back(Obj1{static_cast<int>(a), static_cast<int>(a2), beta});
      }

  auto commutes = [&](const Word& beta, const Word& beta2, const Word& h,
                      const Word& k) {
    // beta . f(k) = f(h) . beta2
    Verdict v = engB->eq_verdict(concat(*B, beta, apply(f, k)),
                                 concat(*B, apply(f, h), beta2));
    if (v == Verdict::unknown)
      throw error(errc::undecided, "iso-comma square undecided");
    return v == Verdict::equal;
  };

  FpCategoryBuilder b1("nerve1(" + A->label + ")");
  for (const auto& o : obj1)
    b1.object("ic{" + A->objects[static_cast<size_t>(o.a)] + ";" +
              A->objects[static_cast<size_t>(o.a2)] + ";" + word_name(*B, o.beta) +
              "}");
  struct Gen1 {
    int src, dst;
    Word h, k;
  };
  std::vector<Gen1> gen1;
  std::map<std::string, int> gen1_lookup;
  auto gen1_key = [&](int s, int d, const Word& h, const Word& k) {
    return std::to_string(s) + ">" + std::to_string(d) + ";" + word_name(*A, h) +
           "|" + word_name(*A, k);
  };
  for (size_t s = 0; s < obj1.size(); ++s) {
    for (size_t d = 0; d < obj1.size(); ++d) {
      for (const auto& h : enA->hom(obj1[s].a, obj1[d].a)) {
        for (const auto& k : enA->hom(obj1[s].a2, obj1[d].a2)) {
          if (s == d && h.is_identity() && k.is_identity()) continue;
          if (!commutes(obj1[s].beta, obj1[d].beta, h, k)) continue;
          std::string nm = "icm{" + std::to_string(s) + ">" + std::to_string(d) +
                           ";" + word_name(*A, h) + "|" + word_name(*A, k) + "}";
          b1.gen(nm,
                 "ic{" + A->objects[static_cast<size_t>(obj1[s].a)] + ";" +
                     A->objects[static_cast<size_t>(obj1[s].a2)] + ";" +
                     word_name(*B, obj1[s].beta) + "}",
                 "ic{" + A->objects[static_cast<size_t>(obj1[d].a)] + ";" +
                     A->objects[static_cast<size_t>(obj1[d].a2)] + ";" +
                     word_name(*B, obj1[d].beta) + "}");
          gen1_lookup[gen1_key(static_cast<int>(s), static_cast<int>(d), h, k)] =
              static_cast<int>(gen1.size());
          gen1.push_back(Gen1{static_cast<int>(s), static_cast<int>(d), h, k});
        }
      }
    }
  }
  auto canonA = [&](const Word& w) {
    auto c = canonical_arrow(A, w, caps);
    if (!c) throw error(errc::undecided, "arrow class could not be resolved");
    return *c;
  };
  auto arrow1 = [&](int s, int d, const Word& h, const Word& k) {
    if (s == d && h.is_identity() && k.is_identity()) return identity_word(s);
    auto it = gen1_lookup.find(gen1_key(s, d, h, k));
    if (it == gen1_lookup.end())
      throw error(errc::undecided, "iso-comma arrow not recognized");
    Word w;
    w.src = s;
    w.dst = d;
    w.letters.push_back(Letter{it->second, false});
    return w;
  };
  for (size_t g1 = 0; g1 < gen1.size(); ++g1)
    for (size_t g2 = 0; g2 < gen1.size(); ++g2) {
      if (gen1[g1].dst != gen1[g2].src) continue;
      Word h = canonA(concat(*A, gen1[g1].h, gen1[g2].h));
      Word k = canonA(concat(*A, gen1[g1].k, gen1[g2].k));
      Word lhs;
      lhs.src = gen1[g1].src;
      lhs.dst = gen1[g2].dst;
      lhs.letters = {Letter{static_cast<int>(g1), false},
                     Letter{static_cast<int>(g2), false}};
      b1.relation(lhs, arrow1(gen1[g1].src, gen1[g2].dst, h, k));
    }
  CatPtr X1 = b1.build();

  // composable pairs of isos
  struct Obj2 {
    int first, second;  // obj1 indices
  };
  std::vector<Obj2> obj2;
  FpCategoryBuilder b2("nerve2(" + A->label + ")");
  auto obj2_name = [](int s, int d) {
    return "ic3{" + std::to_string(s) + ";" + std::to_string(d) + "}";
  };
  for (size_t s = 0; s < obj1.size(); ++s)
    for (size_t d = 0; d < obj1.size(); ++d) {
      if (obj1[s].a2 != obj1[d].a) continue;
      obj2.push_back(Obj2{static_cast<int>(s), static_cast<int>(d)});
      b2.object(obj2_name(static_cast<int>(s), static_cast<int>(d)));
    }
  struct Gen2 {
    int src, dst;  // obj2 indices
    Word h, k, l;
  };
  std::vector<Gen2> gen2;
  std::map<std::string, int> gen2_lookup;
  auto gen2_key = [&](int s, int d, const Word& h, const Word& k, const Word& l) {
    return std::to_string(s) + ">" + std::to_string(d) + ";" + word_name(*A, h) +
           "|" + word_name(*A, k) + "|" + word_name(*A, l);
  };
  for (size_t s = 0; s < obj2.size(); ++s) {
    const Obj1& sf = obj1[static_cast<size_t>(obj2[s].first)];
    const Obj1& ss = obj1[static_cast<size_t>(obj2[s].second)];
    for (size_t d = 0; d < obj2.size(); ++d) {
      const Obj1& df = obj1[static_cast<size_t>(obj2[d].first)];
      const Obj1& ds = obj1[static_cast<size_t>(obj2[d].second)];
      for (const auto& h : enA->hom(sf.a, df.a))
        for (const auto& k : enA->hom(sf.a2, df.a2)) {
          if (!commutes(sf.beta, df.beta, h, k)) continue;
          for (const auto& l : enA->hom(ss.a2, ds.a2)) {
            if (!commutes(ss.beta, ds.beta, k, l)) continue;
            if (s == d && h.is_identity() && k.is_identity() && l.is_identity())
              continue;
            b2.gen("ic3m{" + std::to_string(s) + ">" + std::to_string(d) + ";" +
                       word_name(*A, h) + "|" + word_name(*A, k) + "|" +
                       word_name(*A, l) + "}",
                   obj2_name(obj2[s].first, obj2[s].second),
                   obj2_name(obj2[d].first, obj2[d].second));
            gen2_lookup[gen2_key(static_cast<int>(s), static_cast<int>(d), h, k, l)] =
                static_cast<int>(gen2.size());
            gen2.push_back(Gen2{static_cast<int>(s), static_cast<int>(d), h, k, l});
          }
        }
    }
  }
  auto arrow2 = [&](int s, int d, const Word& h, const Word& k, const Word& l) {
    if (s == d && h.is_identity() && k.is_identity() && l.is_identity())
      return identity_word(s);
    auto it = gen2_lookup.find(gen2_key(s, d, h, k, l));
    if (it == gen2_lookup.end())
      throw error(errc::undecided, "iso-comma pair arrow not recognized");
    Word w;
    w.src = s;
    w.dst = d;
    w.letters.push_back(Letter{it->second, false});
    return w;
  };
  for (size_t g1i = 0; g1i < gen2.size(); ++g1i)
    for (size_t g2i = 0; g2i < gen2.size(); ++g2i) {
      if (gen2[g1i].dst != gen2[g2i].src) continue;
      Word h = canonA(concat(*A, gen2[g1i].h, gen2[g2i].h));
      Word k = canonA(concat(*A, gen2[g1i].k, gen2[g2i].k));
      Word l = canonA(concat(*A, gen2[g1i].l, gen2[g2i].l));
      Word lhs;
      lhs.src = gen2[g1i].src;
      lhs.dst = gen2[g2i].dst;
      lhs.letters = {Letter{static_cast<int>(g1i), false},
                     Letter{static_cast<int>(g2i), false}};
      b2.relation(lhs, arrow2(gen2[g1i].src, gen2[g2i].dst, h, k, l));
    }
  CatPtr X2 = b2.build();

  // structure functors
  CodescentDiagram X;
  X.x0 = A;
  X.x1 = X1;
  X.x2 = X2;
  {
    FunctorPresentation d0;
    d0.source = X1;
    d0.target = A;
    for (const auto& o : obj1) d0.object_map.push_back(o.a);
    for (const auto& g : gen1) d0.generator_map.push_back(g.h);
    d0.inverse_map.assign(gen1.size(), std::nullopt);
    X.d0 = std::move(d0);
    FunctorPresentation d1;
    d1.source = X1;
    d1.target = A;
    for (const auto& o : obj1) d1.object_map.push_back(o.a2);
    for (const auto& g : gen1) d1.generator_map.push_back(g.k);
    d1.inverse_map.assign(gen1.size(), std::nullopt);
    X.d1 = std::move(d1);
  }
  {
    FunctorPresentation sec;
    sec.source = A;
    sec.target = X1;
    for (size_t a = 0; a < A->objects.size(); ++a) {
      Word idb = identity_word(f.on_object(static_cast<int>(a)));
      auto it = obj1_lookup.find(obj1_key(static_cast<int>(a), static_cast<int>(a), idb));
      if (it == obj1_lookup.end())
        throw error(errc::undecided, "diagonal object missing from the iso-comma");
      sec.object_map.push_back(it->second);
    }
    sec.inverse_map.assign(A->generators.size(), std::nullopt);
    for (size_t g = 0; g < A->generators.size(); ++g) {
      Word gw;
      gw.src = A->generators[g].src;
      gw.dst = A->generators[g].dst;
      gw.letters.push_back(Letter{static_cast<int>(g), false});
      Word cg = canonA(gw);
      sec.generator_map.push_back(
          arrow1(sec.object_map[static_cast<size_t>(gw.src)],
                 sec.object_map[static_cast<size_t>(gw.dst)], cg, cg));
      if (A->is_inverted(static_cast<int>(g))) {
        Word ci = canonA(word_inverse(*A, gw));
        sec.inverse_map[g] =
            arrow1(sec.object_map[static_cast<size_t>(gw.dst)],
                   sec.object_map[static_cast<size_t>(gw.src)], ci, ci);
      }
    }
    X.sec = std::move(sec);
  }
  {
    FunctorPresentation p0, p1, p2;
    p0.source = p1.source = p2.source = X2;
    p0.target = p1.target = p2.target = X1;
    for (const auto& o : obj2) {
      const Obj1& first = obj1[static_cast<size_t>(o.first)];
      const Obj1& second = obj1[static_cast<size_t>(o.second)];
      p0.object_map.push_back(o.first);
      p2.object_map.push_back(o.second);
      Word comp = canonB(concat(*B, first.beta, second.beta));
      auto it = obj1_lookup.find(obj1_key(first.a, second.a2, comp));
      if (it == obj1_lookup.end())
        throw error(errc::undecided, "composite iso missing from the iso-comma");
      p1.object_map.push_back(it->second);
    }
    for (const auto& g : gen2) {
      const Obj2& s = obj2[static_cast<size_t>(g.src)];
      const Obj2& d = obj2[static_cast<size_t>(g.dst)];
      p0.generator_map.push_back(arrow1(s.first, d.first, g.h, g.k));
      p2.generator_map.push_back(arrow1(s.second, d.second, g.k, g.l));
      p1.generator_map.push_back(
          arrow1(p1.object_map[static_cast<size_t>(g.src)],
                 p1.object_map[static_cast<size_t>(g.dst)], g.h, g.l));
    }
    p0.inverse_map.assign(gen2.size(), std::nullopt);
    p1.inverse_map.assign(gen2.size(), std::nullopt);
    p2.inverse_map.assign(gen2.size(), std::nullopt);
    X.p0 = std::move(p0);
    X.p1 = std::move(p1);
    X.p2 = std::move(p2);
  }
  X.n0 = identity_cell(compose(X.sec, X.d0), identity_functor(A));
  X.n1 = identity_cell(compose(X.sec, X.d1), identity_functor(A));
  X.th01 = identity_cell(compose(X.p0, X.d0), compose(X.p1, X.d0));
  X.th02 = identity_cell(compose(X.p0, X.d1), compose(X.p2, X.d0));
  X.th12 = identity_cell(compose(X.p1, X.d1), compose(X.p2, X.d1));

  NerveResult res;
  res.X = std::make_shared<const CodescentDiagram>(std::move(X));
  res.f = f;
  return res;
}

// ---- checkers --------------------------------------------------------------

Report check_codescent(const CodescentDiagram& X, const Caps& caps) {
  Report rep;
  struct FunEntry {
    const char* name;
    const FunctorPresentation* f;
    CatPtr src, dst;
  };
  const FunEntry funs[] = {
      {"d0", &X.d0, X.x1, X.x0}, {"d1", &X.d1, X.x1, X.x0},
      {"i", &X.sec, X.x0, X.x1}, {"p0", &X.p0, X.x2, X.x1},
      {"p1", &X.p1, X.x2, X.x1}, {"p2", &X.p2, X.x2, X.x1},
  };
  for (const auto& fe : funs) {
    ++rep.checked;
    if (fe.f->source != fe.src || fe.f->target != fe.dst) {
      rep.add(fe.name, Verdict::unequal, "endpoint categories are not as in the shape");
      continue;
    }
    rep.merge(check_functor(*fe.f, caps), std::string(fe.name) + ": ");
  }
  if (!rep.ok()) return rep;

  struct CellEntry {
    const char* name;
    const NatTransfo* t;
    FunctorPresentation src, dst;
  };
  const CellEntry cells[] = {
      {"n0", &X.n0, compose(X.sec, X.d0), identity_functor(X.x0)},
      {"n1", &X.n1, compose(X.sec, X.d1), identity_functor(X.x0)},
      {"th01", &X.th01, compose(X.p0, X.d0), compose(X.p1, X.d0)},
      {"th02", &X.th02, compose(X.p0, X.d1), compose(X.p2, X.d0)},
      {"th12", &X.th12, compose(X.p1, X.d1), compose(X.p2, X.d1)},
  };
  for (const auto& ce : cells) {
    ++rep.checked;
    Verdict vs = functors_equal(ce.t->src_fun, ce.src, caps);
    Verdict vd = functors_equal(ce.t->dst_fun, ce.dst, caps);
    if (vs != Verdict::equal || vd != Verdict::equal) {
      Verdict v = (vs == Verdict::unknown || vd == Verdict::unknown)
                      ? Verdict::unknown
                      : Verdict::unequal;
      rep.add(ce.name, v, "endpoint functors are not the required composites");
      continue;
    }
    ++rep.checked;
    if (!ce.t->invertible()) {
      rep.add(ce.name, Verdict::unequal, "cell lacks an inverse family");
      continue;
    }
    rep.merge(check_natural(*ce.t, caps), std::string(ce.name) + ": ");
  }
  return rep;
}

Report check_pseudocoequalizing(const PseudoCoeqData& P, const Caps& caps) {
  Report rep;
  const CodescentDiagram& X = *P.X;
  if (P.q.source != X.x0 || P.q.target != P.C) {
    rep.add("q", Verdict::unequal, "q must run from the zero object into C");
    return rep;
  }
  rep.merge(check_functor(P.q, caps), "q: ");
  ++rep.checked;
  Verdict vs = functors_equal(P.xi.src_fun, compose(X.d0, P.q), caps);
  Verdict vd = functors_equal(P.xi.dst_fun, compose(X.d1, P.q), caps);
  if (vs != Verdict::equal || vd != Verdict::equal)
    rep.add("xi", Verdict::unequal, "xi endpoints are not d0;q and d1;q");
  ++rep.checked;
  if (!P.xi.invertible())
    rep.add("xi", Verdict::unequal, "insertion cell lacks an inverse family");
  if (!rep.ok()) return rep;
  rep.merge(check_natural(P.xi, caps), "xi: ");
  if (!rep.ok()) return rep;

  auto eng = engine_for(P.C, caps);
  const FpCategory& C = *P.C;
  const FpCategory& x0 = *X.x0;
  const FpCategory& x2 = *X.x2;
  if (!X.n0.invertible() || !X.n1.invertible()) {
    rep.add("cells", Verdict::unequal, "pseudosection cells lack inverse families");
    return rep;
  }
  for (size_t x = 0; x < x0.objects.size(); ++x) {
    ++rep.checked;
    int ix = X.sec.on_object(static_cast<int>(x));
    Word lhs = concat(C, {apply(P.q, (*X.n0.inverse_components)[x]),
                          P.xi.components[static_cast<size_t>(ix)],
                          apply(P.q, X.n1.components[x])});
    Verdict v = eng->eq_verdict(lhs, identity_word(lhs.src));
    if (v != Verdict::equal)
      rep.add("lower at " + x0.objects[x], v,
              word_name(C, lhs) + " should be an identity");
  }
  for (size_t v2 = 0; v2 < x2.objects.size(); ++v2) {
    ++rep.checked;
    int a0 = X.p0.on_object(static_cast<int>(v2));
    int a1 = X.p1.on_object(static_cast<int>(v2));
    int a2 = X.p2.on_object(static_cast<int>(v2));
    Word lhs = concat(C, {apply(P.q, X.th01.components[v2]),
                          P.xi.components[static_cast<size_t>(a1)],
                          apply(P.q, X.th12.components[v2])});
    Word rhs = concat(C, {P.xi.components[static_cast<size_t>(a0)],
                          apply(P.q, X.th02.components[v2]),
                          P.xi.components[static_cast<size_t>(a2)]});
    Verdict v = eng->eq_verdict(lhs, rhs);
    if (v != Verdict::equal)
      rep.add("higher at " + x2.objects[v2], v,
              word_name(C, lhs) + " vs " + word_name(C, rhs));
  }
  return rep;
}

// ---- bicoequalizer -----------------------------------------------------------

BicoeqResult bicoequalizer_of_codescent(const CodescentPtr& X, const Caps& caps) {
  (void)caps;
  const CodescentDiagram& D = *X;
  const FpCategory& x0 = *D.x0;
  const FpCategory& x1 = *D.x1;
  const FpCategory& x2 = *D.x2;
  if (!D.n0.invertible() || !D.n1.invertible() || !D.th01.invertible() ||
      !D.th02.invertible() || !D.th12.invertible())
    throw error(errc::validation_error,
                "bicoequalizer needs invertible structural cells");

  FpCategoryBuilder b("bicoeq(" + x0.label + ")");
  for (const auto& o : x0.objects) b.object(o);
  for (const auto& g : x0.generators)
    b.gen(g.name, x0.objects[static_cast<size_t>(g.src)],
          x0.objects[static_cast<size_t>(g.dst)]);
  for (size_t g = 0; g < x0.generators.size(); ++g)
    if (x0.is_inverted(static_cast<int>(g))) b.invert(x0.generators[g].name);

  BicoeqResult R;
  int next_gen = static_cast<int>(x0.generators.size());
  for (size_t w = 0; w < x1.objects.size(); ++w) {
    std::string nm = "xi[" + x1.objects[w] + "]";
    b.gen(nm, x0.objects[static_cast<size_t>(D.d0.on_object(static_cast<int>(w)))],
          x0.objects[static_cast<size_t>(D.d1.on_object(static_cast<int>(w)))]);
    b.invert(nm);
    R.xi_gens.push_back(next_gen++);
  }
  auto xi_word = [&](int w) {
    Word out;
    out.src = D.d0.on_object(w);
    out.dst = D.d1.on_object(w);
    out.letters.push_back(Letter{R.xi_gens[static_cast<size_t>(w)], false});
    return out;
  };
  // x0 words are valid verbatim: objects and generators come first, in order
  for (const auto& rel : x0.relations) b.relation(rel.lhs, rel.rhs);
  // naturality of the inserted cell over every generator of the walking object
  for (size_t h = 0; h < x1.generators.size(); ++h) {
    Word hw;
    hw.src = x1.generators[h].src;
    hw.dst = x1.generators[h].dst;
    hw.letters.push_back(Letter{static_cast<int>(h), false});
    Word lhs = apply(D.d0, hw);
    lhs.letters.push_back(Letter{R.xi_gens[static_cast<size_t>(hw.dst)], false});
    lhs.dst = D.d1.on_object(hw.dst);
    Word rhs = xi_word(hw.src);
    Word tail = apply(D.d1, hw);
    rhs.letters.insert(rhs.letters.end(), tail.letters.begin(), tail.letters.end());
    rhs.dst = tail.dst;
    b.relation(lhs, rhs);
  }
  // unit: the component at a section object is forced by the pseudosection cells
  for (size_t x = 0; x < x0.objects.size(); ++x) {
    Word rhs = concat(x0, D.n0.components[x], (*D.n1.inverse_components)[x]);
    b.relation(xi_word(D.sec.on_object(static_cast<int>(x))), rhs);
  }
  // composition: components multiply along the higher cells
  for (size_t v = 0; v < x2.objects.size(); ++v) {
    Word lhs = D.th01.components[v];
    lhs = concat(x0, lhs, xi_word(D.p1.on_object(static_cast<int>(v))));
    lhs = concat(x0, lhs, D.th12.components[v]);
    Word rhs = xi_word(D.p0.on_object(static_cast<int>(v)));
    rhs = concat(x0, rhs, D.th02.components[v]);
    rhs = concat(x0, rhs, xi_word(D.p2.on_object(static_cast<int>(v))));
    b.relation(lhs, rhs);
  }
  CatPtr C = b.build();

  R.data.X = X;
  R.data.C = C;
  FunctorPresentation q;
  q.source = D.x0;
  q.target = C;
  for (size_t o = 0; o < x0.objects.size(); ++o)
    q.object_map.push_back(static_cast<int>(o));
  for (size_t g = 0; g < x0.generators.size(); ++g) {
    Word w;
    w.src = x0.generators[g].src;
    w.dst = x0.generators[g].dst;
    w.letters.push_back(Letter{static_cast<int>(g), false});
    q.generator_map.push_back(std::move(w));
  }
  q.inverse_map.assign(x0.generators.size(), std::nullopt);
  R.data.q = std::move(q);

  NatTransfo xi;
  xi.src_fun = compose(D.d0, R.data.q);
  xi.dst_fun = compose(D.d1, R.data.q);
  std::vector<Word> invs;
  for (size_t w = 0; w < x1.objects.size(); ++w) {
    xi.components.push_back(xi_word(static_cast<int>(w)));
    invs.push_back(word_inverse(*C, xi.components.back()));
  }
  xi.inverse_components = std::move(invs);
  R.data.xi = std::move(xi);
  return R;
}

ComparisonResult compare_pseudocoeq(const BicoeqResult& B, const PseudoCoeqData& P,
                                    const Caps& caps) {
  if (B.data.X != P.X)
    throw error(errc::validation_error,
                "comparison needs pseudocoequalizing data over the same diagram");
  if (!P.xi.invertible())
    throw error(errc::validation_error, "comparison needs an invertible insertion");
  const FpCategory& x0 = *P.X->x0;
  ComparisonResult res;
  FunctorPresentation& h = res.functor;
  h.source = B.data.C;
  h.target = P.C;
  h.object_map = P.q.object_map;
  h.generator_map.resize(B.data.C->generators.size());
  h.inverse_map.assign(B.data.C->generators.size(), std::nullopt);
  for (size_t g = 0; g < x0.generators.size(); ++g) {
    h.generator_map[g] = P.q.generator_map[g];
    if (P.q.inverse_map.size() > g) h.inverse_map[g] = P.q.inverse_map[g];
  }
  for (size_t w = 0; w < B.xi_gens.size(); ++w) {
    size_t slot = static_cast<size_t>(B.xi_gens[w]);
    h.generator_map[slot] = P.xi.components[w];
    h.inverse_map[slot] = (*P.xi.inverse_components)[w];
  }
  res.report = check_functor(h, caps);
  return res;
}

// ---- the bicoequalizer weight ---------------------------------------------------

const WeightJ& weight_j() {
  static const WeightJ J = [] {
    WeightJ w;
    {
      FpCategoryBuilder b("Jpoint");
      b.object("pt");
      w.j0 = b.build();
    }
    {
      FpCategoryBuilder b("Jiso");
      b.object("x").object("y").gen("j", "x", "y").invert("j");
      w.j1 = b.build();
    }
    {
      FpCategoryBuilder b("Jtriangle");
      b.object("x").object("y").object("z");
      b.gen("jxy", "x", "y").gen("jyz", "y", "z");
      b.invert("jxy").invert("jyz");
      w.j2 = b.build();
    }
    auto fp = [](const CatPtr& s, const CatPtr& t, std::vector<int> om,
                 std::vector<Word> gm) {
      FunctorPresentation f;
      f.source = s;
      f.target = t;
      f.object_map = std::move(om);
      f.generator_map = std::move(gm);
      f.inverse_map.assign(f.generator_map.size(), std::nullopt);
      return f;
    };
    w.jd0 = fp(w.j0, w.j1, {0}, {});
    w.jd1 = fp(w.j0, w.j1, {1}, {});
    w.ji = fp(w.j1, w.j0, {0, 0}, {identity_word(0)});
    w.jp0 = fp(w.j1, w.j2, {0, 1}, {parse_word_name(*w.j2, "jxy")});
    w.jp1 = fp(w.j1, w.j2, {0, 2}, {parse_word_name(*w.j2, "jxy.jyz")});
    w.jp2 = fp(w.j1, w.j2, {1, 2}, {parse_word_name(*w.j2, "jyz")});
    return w;
  }();
  return J;
}

WeightedViaCodescent weighted_bicolimit_via_codescent(const DiagramOfCategories& F,
                                                      const WeightPresentation& W,
                                                      const Caps& caps) {
  if (F.index != W.index)
    throw error(errc::index_mismatch, "diagram and weight live on different indices");
  WeightedViaCodescent res;
  res.elements = category_of_elements(W, caps);
  res.reindexed = reindex_along_elements(F, res.elements);
  MarkedClass cart;
  cart.index = res.elements.elements;
  cart.marked = res.elements.cartesian_generators;
  res.codescent = build_marked_codescent(res.reindexed, cart, caps);
  res.bicoeq = bicoequalizer_of_codescent(res.codescent.X, caps);
  return res;
}

}  // namespace catcolim
