#include "catcolim/groth.hpp"

#include <algorithm>
#include <functional>

namespace catcolim {

static std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// ---- diagrams -------------------------------------------------------------

Report validate_diagram(const DiagramOfCategories& F, const Caps& caps) {
  Report rep;
  const FpCategory& I = *F.index;
  if (F.fibers.size() != I.objects.size() ||
      F.transitions.size() != I.generators.size()) {
    rep.add("shape", Verdict::unequal, "one fiber per object and one transition per generator required");
    return rep;
  }
  for (size_t d = 0; d < I.generators.size(); ++d) {
    ++rep.checked;
    const GenDecl& gd = I.generators[d];
    const FunctorPresentation& t = F.transitions[d];
    if (t.source != F.fibers[static_cast<size_t>(gd.src)] ||
        t.target != F.fibers[static_cast<size_t>(gd.dst)]) {
      rep.add("transition " + gd.name, Verdict::unequal,
              "endpoints do not match the generator's fibers");
      continue;
    }
    if (I.is_inverted(static_cast<int>(d)) && !is_identity_functor(t))
      rep.add("transition " + gd.name, Verdict::unequal,
              "inverted index generators require identity transitions");
    rep.merge(check_functor(t, caps), "transition " + gd.name + ": ");
  }
  if (!rep.ok()) return rep;
  for (size_t r = 0; r < I.relations.size(); ++r) {
    ++rep.checked;
    const Relation& rel = I.relations[r];
    FunctorPresentation a = functor_along_word(F, rel.lhs);
    FunctorPresentation b = functor_along_word(F, rel.rhs);
    Verdict v = functors_equal(a, b, caps);
    if (v != Verdict::equal)
      rep.add("relation #" + std::to_string(r), v,
              "composite transitions along " + word_name(I, rel.lhs) + " and " +
                  word_name(I, rel.rhs) + " differ");
  }
  return rep;
}

void require_valid_diagram(const DiagramOfCategories& F, const Caps& caps) {
  Report rep = validate_diagram(F, caps);
  if (rep.ok()) return;
  throw error(rep.has_unknown() ? errc::undecided : errc::invalid_diagram,
              "invalid diagram: " + rep.summary());
}

FunctorPresentation functor_along_word(const DiagramOfCategories& F, const Word& w) {
  FunctorPresentation acc = identity_functor(F.fibers[static_cast<size_t>(w.src)]);
  for (const auto& l : w.letters) {
    const FunctorPresentation& t = F.transitions[static_cast<size_t>(l.gen)];
    if (l.inv) {
      if (!is_identity_functor(t))
        throw error(errc::invalid_diagram,
                    "cannot traverse a formal inverse over a non-identity transition");
      continue;
    }
    acc = compose(acc, t);
  }
  return acc;
}

MarkedClass make_marked(const CatPtr& index, const std::vector<std::string>& names) {
  MarkedClass S;
  S.index = index;
  for (const auto& n : names) {
    int g = index->generator_index(n);
    if (g < 0)
      throw error(errc::unknown_generator, "marked class: unknown generator '" + n + "'");
    S.marked.push_back(g);
  }
  std::sort(S.marked.begin(), S.marked.end());
  S.marked.erase(std::unique(S.marked.begin(), S.marked.end()), S.marked.end());
  return S;
}

// ---- oplax colimit ----------------------------------------------------------

GrothendieckResult oplax_colimit(const DiagramOfCategories& F, const Caps& caps) {
  require_valid_diagram(F, caps);
  auto idx_enum = enumeration_for(F.index, caps);
  if (idx_enum->verdict != Finiteness::finite)
    throw error(errc::index_not_finite, "oplax colimit needs a finite index");

  const FpCategory& I = *F.index;
  GrothendieckResult G;
  G.diagram = F;
  FpCategoryBuilder b("oplax(" + I.label + ")");

  G.obj_of.resize(I.objects.size());
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& fib = *F.fibers[i];
    G.obj_of[i].resize(fib.objects.size());
    for (size_t x = 0; x < fib.objects.size(); ++x) {
      G.obj_of[i][x] = static_cast<int>(G.obj_pair.size());
      G.obj_pair.emplace_back(static_cast<int>(i), static_cast<int>(x));
      b.object(pair_name(I.objects[i], fib.objects[x]));
    }
  }
  int n_gen = 0;
  G.vertical_gen.resize(I.objects.size());
  std::vector<std::string> inverted_names;
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& fib = *F.fibers[i];
    G.vertical_gen[i].resize(fib.generators.size());
    for (size_t g = 0; g < fib.generators.size(); ++g) {
      std::string nm = pair_name(I.objects[i], fib.generators[g].name);
      b.gen(nm, pair_name(I.objects[i], fib.objects[static_cast<size_t>(fib.generators[g].src)]),
            pair_name(I.objects[i], fib.objects[static_cast<size_t>(fib.generators[g].dst)]));
      if (fib.is_inverted(static_cast<int>(g))) inverted_names.push_back(nm);
      G.vertical_gen[i][g] = n_gen++;
    }
  }
  G.transition_gen.resize(I.generators.size());
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    const FpCategory& fib = *F.fibers[static_cast<size_t>(gd.src)];
    const FpCategory& dst_fib = *F.fibers[static_cast<size_t>(gd.dst)];
    G.transition_gen[d].resize(fib.objects.size());
    for (size_t x = 0; x < fib.objects.size(); ++x) {
      std::string nm = pair_name(gd.name, fib.objects[x]);
      int fx = F.transitions[d].on_object(static_cast<int>(x));
      b.gen(nm, pair_name(I.objects[static_cast<size_t>(gd.src)], fib.objects[x]),
            pair_name(I.objects[static_cast<size_t>(gd.dst)],
                      dst_fib.objects[static_cast<size_t>(fx)]));
      if (I.is_inverted(static_cast<int>(d))) inverted_names.push_back(nm);
      G.transition_gen[d][x] = n_gen++;
      G.cartesian_generators.push_back(G.transition_gen[d][x]);
    }
  }
  for (const auto& nm : inverted_names) b.invert(nm);

  // words in the total category, built from the bookkeeping tables
  auto vertical_word = [&](int i, const Word& w) {
    Word out;
    out.src = G.obj_of[static_cast<size_t>(i)][static_cast<size_t>(w.src)];
    out.dst = G.obj_of[static_cast<size_t>(i)][static_cast<size_t>(w.dst)];
    for (const auto& l : w.letters)
      out.letters.push_back(
          Letter{G.vertical_gen[static_cast<size_t>(i)][static_cast<size_t>(l.gen)], l.inv});
    return out;
  };
  auto lift = [&](const Word& base, int x) { return lift_word(G, base, x); };

  // fiberwise relations
  for (size_t i = 0; i < I.objects.size(); ++i)
    for (const auto& rel : F.fibers[i]->relations)
      b.relation(vertical_word(static_cast<int>(i), rel.lhs),
                 vertical_word(static_cast<int>(i), rel.rhs));
  // interchange: (i,g) . (d,y)  =  (d,x) . (j, F(d)(g))
  auto join = [](const Word& u, const Word& v) {
    Word w;
    w.src = u.src;
    w.dst = v.dst;
    w.letters = u.letters;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
  };
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    const FpCategory& fib = *F.fibers[static_cast<size_t>(gd.src)];
    Word base;
    base.src = gd.src;
    base.dst = gd.dst;
    base.letters.push_back(Letter{static_cast<int>(d), false});
    for (size_t g = 0; g < fib.generators.size(); ++g) {
      Word gw;
      gw.src = fib.generators[g].src;
      gw.dst = fib.generators[g].dst;
      gw.letters.push_back(Letter{static_cast<int>(g), false});
      Word lhs = join(vertical_word(gd.src, gw), lift(base, gw.dst));
      Word rhs = join(lift(base, gw.src),
                      vertical_word(gd.dst, apply(F.transitions[d], gw)));
      b.relation(lhs, rhs);
    }
  }
  // lifts of index relations
  for (const auto& rel : I.relations) {
    const FpCategory& fib = *F.fibers[static_cast<size_t>(rel.lhs.src)];
    for (size_t x = 0; x < fib.objects.size(); ++x)
      b.relation(lift(rel.lhs, static_cast<int>(x)), lift(rel.rhs, static_cast<int>(x)));
  }

  G.total = b.build();

  // projection
  {
    FunctorPresentation p;
    p.source = G.total;
    p.target = F.index;
    p.object_map.resize(G.obj_pair.size());
    for (size_t o = 0; o < G.obj_pair.size(); ++o)
      p.object_map[o] = G.obj_pair[o].first;
    p.generator_map.resize(static_cast<size_t>(n_gen));
    p.inverse_map.assign(static_cast<size_t>(n_gen), std::nullopt);
    for (size_t i = 0; i < I.objects.size(); ++i)
      for (size_t g = 0; g < G.vertical_gen[i].size(); ++g)
        p.generator_map[static_cast<size_t>(G.vertical_gen[i][g])] =
            identity_word(static_cast<int>(i));
    for (size_t d = 0; d < I.generators.size(); ++d) {
      Word dw;
      dw.src = I.generators[d].src;
      dw.dst = I.generators[d].dst;
      dw.letters.push_back(Letter{static_cast<int>(d), false});
      for (size_t x = 0; x < G.transition_gen[d].size(); ++x)
        p.generator_map[static_cast<size_t>(G.transition_gen[d][x])] = dw;
    }
    G.projection = std::move(p);
  }
  // cocone inclusions
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& fib = *F.fibers[i];
    FunctorPresentation q;
    q.source = F.fibers[i];
    q.target = G.total;
    for (size_t x = 0; x < fib.objects.size(); ++x)
      q.object_map.push_back(G.obj_of[i][x]);
    for (size_t g = 0; g < fib.generators.size(); ++g) {
      Word w;
      w.src = G.obj_of[i][static_cast<size_t>(fib.generators[g].src)];
      w.dst = G.obj_of[i][static_cast<size_t>(fib.generators[g].dst)];
      w.letters.push_back(Letter{G.vertical_gen[i][g], false});
      q.generator_map.push_back(std::move(w));
    }
    q.inverse_map.assign(fib.generators.size(), std::nullopt);
    G.cocone_inclusions.push_back(std::move(q));
  }
  // oplax cells: component at x is the lift (d, x)
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    NatTransfo cell;
    cell.src_fun = G.cocone_inclusions[static_cast<size_t>(gd.src)];
    cell.dst_fun = compose(F.transitions[d],
                           G.cocone_inclusions[static_cast<size_t>(gd.dst)]);
    const FpCategory& fib = *F.fibers[static_cast<size_t>(gd.src)];
    for (size_t x = 0; x < fib.objects.size(); ++x) {
      Word base;
      base.src = gd.src;
      base.dst = gd.dst;
      base.letters.push_back(Letter{static_cast<int>(d), false});
      cell.components.push_back(lift_word(G, base, static_cast<int>(x)));
    }
    if (I.is_inverted(static_cast<int>(d))) {
      std::vector<Word> invs;
      for (const auto& c : cell.components) invs.push_back(word_inverse(*G.total, c));
      cell.inverse_components = std::move(invs);
    }
    G.oplax_cells.push_back(std::move(cell));
  }
  return G;
}

Word lift_word(const GrothendieckResult& G, const Word& base, int fiber_obj) {
  const DiagramOfCategories& F = G.diagram;
  Word out;
  int cur = fiber_obj;
  out.src = G.obj_of[static_cast<size_t>(base.src)][static_cast<size_t>(cur)];
  for (const auto& l : base.letters) {
    if (!l.inv) {
      out.letters.push_back(Letter{
          G.transition_gen[static_cast<size_t>(l.gen)][static_cast<size_t>(cur)], false});
      cur = F.transitions[static_cast<size_t>(l.gen)].on_object(cur);
    } else {
      if (!is_identity_functor(F.transitions[static_cast<size_t>(l.gen)]))
        throw error(errc::invalid_diagram,
                    "no canonical lift over a formally inverted generator with "
                    "non-identity transition");
      out.letters.push_back(Letter{
          G.transition_gen[static_cast<size_t>(l.gen)][static_cast<size_t>(cur)], true});
    }
  }
  out.dst = G.obj_of[static_cast<size_t>(base.dst)][static_cast<size_t>(cur)];
  return out;
}

std::vector<int> mark_cartesian(const GrothendieckResult& G, const MarkedClass& S) {
  if (S.index != G.diagram.index)
    throw error(errc::index_mismatch, "marked class lives on a different index");
  std::vector<int> out;
  for (int d : S.marked) {
    if (d < 0 || d >= static_cast<int>(G.transition_gen.size()))
      throw error(errc::unknown_generator, "marked class references an unknown generator");
    for (int g : G.transition_gen[static_cast<size_t>(d)]) out.push_back(g);
  }
  return out;
}

std::vector<std::string> generator_names(const FpCategory& cat,
                                         const std::vector<int>& gens) {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (int g : gens) out.push_back(cat.generators[static_cast<size_t>(g)].name);
  return out;
}

// ---- weights ---------------------------------------------------------------

Report validate_weight(const WeightPresentation& W, const Caps& caps) {
  Report rep;
  const FpCategory& I = *W.index;
  if (W.values.size() != I.objects.size() ||
      W.actions.size() != I.generators.size()) {
    rep.add("shape", Verdict::unequal, "one value per object and one action per generator required");
    return rep;
  }
  for (size_t d = 0; d < I.generators.size(); ++d) {
    ++rep.checked;
    const GenDecl& gd = I.generators[d];
    const FunctorPresentation& a = W.actions[d];
    if (a.source != W.values[static_cast<size_t>(gd.dst)] ||
        a.target != W.values[static_cast<size_t>(gd.src)]) {
      rep.add("action " + gd.name, Verdict::unequal,
              "contravariant action endpoints do not match");
      continue;
    }
    if (I.is_inverted(static_cast<int>(d)) && !is_identity_functor(a))
      rep.add("action " + gd.name, Verdict::unequal,
              "inverted index generators require identity actions");
    rep.merge(check_functor(a, caps), "action " + gd.name + ": ");
  }
  if (!rep.ok()) return rep;
  for (size_t r = 0; r < I.relations.size(); ++r) {
    ++rep.checked;
    const Relation& rel = I.relations[r];
    FunctorPresentation a = action_along_word(W, rel.lhs);
    FunctorPresentation b = action_along_word(W, rel.rhs);
    Verdict v = functors_equal(a, b, caps);
    if (v != Verdict::equal)
      rep.add("relation #" + std::to_string(r), v,
              "composite actions along the relation sides differ");
  }
  return rep;
}

void require_valid_weight(const WeightPresentation& W, const Caps& caps) {
  Report rep = validate_weight(W, caps);
  if (rep.ok()) return;
  throw error(rep.has_unknown() ? errc::undecided : errc::invalid_weight,
              "invalid weight: " + rep.summary());
}

FunctorPresentation action_along_word(const WeightPresentation& W, const Word& w) {
  FunctorPresentation acc = identity_functor(W.values[static_cast<size_t>(w.dst)]);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const FunctorPresentation& a = W.actions[static_cast<size_t>(it->gen)];
    if (it->inv) {
      if (!is_identity_functor(a))
        throw error(errc::invalid_weight,
                    "cannot traverse a formal inverse over a non-identity action");
      continue;
    }
    acc = compose(acc, a);
  }
  return acc;
}

ElementsResult category_of_elements(const WeightPresentation& W, const Caps& caps) {
  require_valid_weight(W, caps);
  auto idx_enum = enumeration_for(W.index, caps);
  if (idx_enum->verdict != Finiteness::finite)
    throw error(errc::index_not_finite, "category of elements needs a finite index");
  for (const auto& v : W.values) {
    auto ve = enumeration_for(v, caps);
    if (ve->verdict != Finiteness::finite)
      throw error(errc::value_not_finite, "category of elements needs finite values");
  }

  const FpCategory& I = *W.index;
  ElementsResult E;
  E.weight = W;
  FpCategoryBuilder b("elements(" + I.label + ")");

  E.obj_of.resize(I.objects.size());
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& val = *W.values[i];
    E.obj_of[i].resize(val.objects.size());
    for (size_t w = 0; w < val.objects.size(); ++w) {
      E.obj_of[i][w] = static_cast<int>(E.obj_pair.size());
      E.obj_pair.emplace_back(static_cast<int>(i), static_cast<int>(w));
      b.object(pair_name(I.objects[i], val.objects[w]));
    }
  }
  int n_gen = 0;
  E.fiber_gen.resize(I.objects.size());
  std::vector<std::string> inverted_names;
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& val = *W.values[i];
    E.fiber_gen[i].resize(val.generators.size());
    for (size_t h = 0; h < val.generators.size(); ++h) {
      std::string nm = pair_name(I.objects[i], val.generators[h].name);
      b.gen(nm,
            pair_name(I.objects[i], val.objects[static_cast<size_t>(val.generators[h].src)]),
            pair_name(I.objects[i], val.objects[static_cast<size_t>(val.generators[h].dst)]));
      if (val.is_inverted(static_cast<int>(h))) inverted_names.push_back(nm);
      E.fiber_gen[i][h] = n_gen++;
    }
  }
  E.lift_gen.resize(I.generators.size());
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    const FpCategory& dst_val = *W.values[static_cast<size_t>(gd.dst)];
    const FpCategory& src_val = *W.values[static_cast<size_t>(gd.src)];
    E.lift_gen[d].resize(dst_val.objects.size());
    for (size_t w = 0; w < dst_val.objects.size(); ++w) {
      std::string nm = pair_name(gd.name, dst_val.objects[w]);
      int pulled = W.actions[d].on_object(static_cast<int>(w));
      b.gen(nm,
            pair_name(I.objects[static_cast<size_t>(gd.src)],
                      src_val.objects[static_cast<size_t>(pulled)]),
            pair_name(I.objects[static_cast<size_t>(gd.dst)], dst_val.objects[w]));
      if (I.is_inverted(static_cast<int>(d))) inverted_names.push_back(nm);
      E.lift_gen[d][w] = n_gen++;
    }
  }
  for (const auto& nm : inverted_names) b.invert(nm);

  auto fiber_word = [&](int i, const Word& w) {
    Word out;
    out.src = E.obj_of[static_cast<size_t>(i)][static_cast<size_t>(w.src)];
    out.dst = E.obj_of[static_cast<size_t>(i)][static_cast<size_t>(w.dst)];
    for (const auto& l : w.letters)
      out.letters.push_back(
          Letter{E.fiber_gen[static_cast<size_t>(i)][static_cast<size_t>(l.gen)], l.inv});
    return out;
  };
  // lift of a base word ending at value object w' of value(dst)
  std::function<Word(const Word&, int)> elem_lift = [&](const Word& base,
                                                        int w_dst) -> Word {
    Word out;
    int cur = w_dst;
    std::vector<Letter> rev;
    for (auto it = base.letters.rbegin(); it != base.letters.rend(); ++it) {
      if (!it->inv) {
        rev.push_back(Letter{E.lift_gen[static_cast<size_t>(it->gen)][static_cast<size_t>(cur)], false});
        cur = W.actions[static_cast<size_t>(it->gen)].on_object(cur);
      } else {
        rev.push_back(Letter{E.lift_gen[static_cast<size_t>(it->gen)][static_cast<size_t>(cur)], true});
      }
    }
    out.letters.assign(rev.rbegin(), rev.rend());
    out.src = E.obj_of[static_cast<size_t>(base.src)][static_cast<size_t>(cur)];
    out.dst = E.obj_of[static_cast<size_t>(base.dst)][static_cast<size_t>(w_dst)];
    return out;
  };

  for (size_t i = 0; i < I.objects.size(); ++i)
    for (const auto& rel : W.values[i]->relations)
      b.relation(fiber_word(static_cast<int>(i), rel.lhs),
                 fiber_word(static_cast<int>(i), rel.rhs));
  for (size_t d = 0; d < I.generators.size(); ++d) {
    const GenDecl& gd = I.generators[d];
    const FpCategory& dst_val = *W.values[static_cast<size_t>(gd.dst)];
    for (size_t h = 0; h < dst_val.generators.size(); ++h) {
      Word hw;
      hw.src = dst_val.generators[h].src;
      hw.dst = dst_val.generators[h].dst;
      hw.letters.push_back(Letter{static_cast<int>(h), false});
      Word dbase;
      dbase.src = gd.src;
      dbase.dst = gd.dst;
      dbase.letters.push_back(Letter{static_cast<int>(d), false});
      Word l1 = elem_lift(dbase, hw.src);
      Word l2 = fiber_word(gd.dst, hw);
      Word r1 = fiber_word(gd.src, apply(W.actions[d], hw));
      Word r2 = elem_lift(dbase, hw.dst);
      Word left;
      left.src = l1.src;
      left.dst = l2.dst;
      left.letters = l1.letters;
      left.letters.insert(left.letters.end(), l2.letters.begin(), l2.letters.end());
      Word right;
      right.src = r1.src;
      right.dst = r2.dst;
      right.letters = r1.letters;
      right.letters.insert(right.letters.end(), r2.letters.begin(), r2.letters.end());
      b.relation(left, right);
    }
  }
  for (const auto& rel : I.relations) {
    const FpCategory& dst_val = *W.values[static_cast<size_t>(rel.lhs.dst)];
    for (size_t w = 0; w < dst_val.objects.size(); ++w)
      b.relation(elem_lift(rel.lhs, static_cast<int>(w)),
                 elem_lift(rel.rhs, static_cast<int>(w)));
  }

  E.elements = b.build();

  {
    FunctorPresentation p;
    p.source = E.elements;
    p.target = W.index;
    p.object_map.resize(E.obj_pair.size());
    for (size_t o = 0; o < E.obj_pair.size(); ++o)
      p.object_map[o] = E.obj_pair[o].first;
    p.generator_map.resize(static_cast<size_t>(n_gen));
    p.inverse_map.assign(static_cast<size_t>(n_gen), std::nullopt);
    for (size_t i = 0; i < I.objects.size(); ++i)
      for (size_t h = 0; h < E.fiber_gen[i].size(); ++h)
        p.generator_map[static_cast<size_t>(E.fiber_gen[i][h])] =
            identity_word(static_cast<int>(i));
    for (size_t d = 0; d < I.generators.size(); ++d) {
      Word dw;
      dw.src = I.generators[d].src;
      dw.dst = I.generators[d].dst;
      dw.letters.push_back(Letter{static_cast<int>(d), false});
      for (size_t w = 0; w < E.lift_gen[d].size(); ++w)
        p.generator_map[static_cast<size_t>(E.lift_gen[d][w])] = dw;
    }
    E.projection = std::move(p);
  }

  // cartesian: every lift, plus fiberwise generators invertible in their value
  for (size_t d = 0; d < I.generators.size(); ++d)
    for (int g : E.lift_gen[d]) E.cartesian_generators.push_back(g);
  for (size_t i = 0; i < I.objects.size(); ++i) {
    const FpCategory& val = *W.values[i];
    for (size_t h = 0; h < val.generators.size(); ++h) {
      if (val.is_inverted(static_cast<int>(h))) {
        E.cartesian_generators.push_back(E.fiber_gen[i][h]);
        continue;
      }
      Word hw;
      hw.src = val.generators[h].src;
      hw.dst = val.generators[h].dst;
      hw.letters.push_back(Letter{static_cast<int>(h), false});
      Verdict v;
      auto inv = find_inverse_arrow(W.values[i], hw, caps, &v);
      if (inv) {
        E.cartesian_generators.push_back(E.fiber_gen[i][h]);
      } else if (v == Verdict::unknown) {
        E.warnings.push_back("invertibility of fiberwise generator " +
                             val.generators[h].name + " at " + I.objects[i] +
                             " is undecided; left unmarked");
      }
    }
  }
  std::sort(E.cartesian_generators.begin(), E.cartesian_generators.end());
  return E;
}

}  // namespace catcolim
