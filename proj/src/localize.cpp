#include "catcolim/localize.hpp"

#include <algorithm>

namespace catcolim {

LocalizationResult invert(const CatPtr& cat, const std::vector<int>& targets) {
  LocalizationResult res;
  res.original = cat;
  res.targets = targets;
  std::sort(res.targets.begin(), res.targets.end());
  res.targets.erase(std::unique(res.targets.begin(), res.targets.end()),
                    res.targets.end());
  for (int t : res.targets)
    if (t < 0 || t >= static_cast<int>(cat->generators.size()))
      throw error(errc::unknown_generator, "invert: generator index out of range");
  bool changed = false;
  for (int t : res.targets)
    if (!cat->is_inverted(t)) changed = true;
  if (!changed) {
    res.localized = cat;
    res.quotient = identity_functor(cat);
    return res;
  }
  FpCategoryBuilder b(cat->label.empty() ? "localized" : cat->label + "[inv]");
  for (const auto& o : cat->objects) b.object(o);
  for (const auto& g : cat->generators)
    b.gen(g.name, cat->objects[static_cast<size_t>(g.src)],
          cat->objects[static_cast<size_t>(g.dst)]);
  for (size_t g = 0; g < cat->generators.size(); ++g)
    if (cat->is_inverted(static_cast<int>(g))) b.invert(cat->generators[g].name);
  for (int t : res.targets) b.invert(cat->generators[static_cast<size_t>(t)].name);
  for (const auto& rel : cat->relations) b.relation(rel.lhs, rel.rhs);
  res.localized = b.build();
  FunctorPresentation q = identity_functor(res.localized);
  q.source = cat;
  res.quotient = std::move(q);
  return res;
}

LocalizationResult invert(const CatPtr& cat, const std::vector<std::string>& targets) {
  std::vector<int> idx;
  for (const auto& n : targets) {
    int g = cat->generator_index(n);
    if (g < 0)
      throw error(errc::unknown_generator, "invert: unknown generator '" + n + "'");
    idx.push_back(g);
  }
  return invert(cat, idx);
}

SigmaColimResult sigma_bicolimit(const DiagramOfCategories& F, const MarkedClass& S,
                                 const Caps& caps) {
  SigmaColimResult res;
  res.groth = oplax_colimit(F, caps);
  res.marking = S;
  std::vector<int> lifts = mark_cartesian(res.groth, S);
  res.loc = invert(res.groth.total, lifts);
  for (const auto& q : res.groth.cocone_inclusions)
    res.cocone.push_back(compose(q, res.loc.quotient));
  std::vector<char> marked_flag(F.index->generators.size(), 0);
  for (int d : S.marked) marked_flag[static_cast<size_t>(d)] = 1;
  for (size_t d = 0; d < res.groth.oplax_cells.size(); ++d) {
    const NatTransfo& cell = res.groth.oplax_cells[d];
    NatTransfo pushed;
    pushed.src_fun = compose(cell.src_fun, res.loc.quotient);
    pushed.dst_fun = compose(cell.dst_fun, res.loc.quotient);
    for (const auto& c : cell.components)
      pushed.components.push_back(apply(res.loc.quotient, c));
    if (marked_flag[d] || cell.inverse_components) {
      std::vector<Word> invs;
      for (const auto& c : pushed.components)
        invs.push_back(word_inverse(*res.loc.localized, c));
      pushed.inverse_components = std::move(invs);
    }
    res.cocone_cells.push_back(std::move(pushed));
  }
  return res;
}

DiagramOfCategories reindex_along_elements(const DiagramOfCategories& F,
                                           const ElementsResult& E) {
  DiagramOfCategories R;
  R.index = E.elements;
  R.fibers.resize(E.elements->objects.size());
  for (size_t o = 0; o < E.obj_pair.size(); ++o)
    R.fibers[o] = F.fibers[static_cast<size_t>(E.obj_pair[o].first)];
  R.transitions.resize(E.elements->generators.size());
  for (size_t i = 0; i < E.fiber_gen.size(); ++i)
    for (int g : E.fiber_gen[i])
      R.transitions[static_cast<size_t>(g)] = identity_functor(F.fibers[i]);
  for (size_t d = 0; d < E.lift_gen.size(); ++d)
    for (int g : E.lift_gen[d])
      R.transitions[static_cast<size_t>(g)] = F.transitions[d];
  return R;
}

WeightedColimResult weighted_bicolimit(const DiagramOfCategories& F,
                                       const WeightPresentation& W,
                                       const Caps& caps) {
  if (F.index != W.index)
    throw error(errc::index_mismatch, "diagram and weight live on different indices");
  WeightedColimResult res;
  res.elements = category_of_elements(W, caps);
  res.reindexed = reindex_along_elements(F, res.elements);
  MarkedClass cart;
  cart.index = res.elements.elements;
  cart.marked = res.elements.cartesian_generators;
  res.sigma = sigma_bicolimit(res.reindexed, cart, caps);
  return res;
}

std::optional<Word> derive_inverse_two_of_three(
    const CatPtr& cat, const Word& u, const Word& v,
    const std::optional<Word>& u_inv, const std::optional<Word>& v_inv,
    const std::optional<Word>& uv_inv, const Caps& caps) {
  auto eng = engine_for(cat, caps);
  Word uv = concat(*cat, u, v);
  std::optional<Word> candidate;
  if (u_inv && v_inv) {
    candidate = concat(*cat, *v_inv, *u_inv);  // inverse of u.v
  } else if (u_inv && uv_inv) {
    candidate = concat(*cat, *uv_inv, u);  // inverse of v
  } else if (v_inv && uv_inv) {
    candidate = concat(*cat, v, *uv_inv);  // inverse of u
  } else {
    return std::nullopt;
  }
  const Word& target = (u_inv && v_inv) ? uv : (u_inv ? v : u);
  Verdict a = eng->eq_verdict(concat(*cat, target, *candidate),
                              identity_word(target.src));
  Verdict b = eng->eq_verdict(concat(*cat, *candidate, target),
                              identity_word(target.dst));
  if (a == Verdict::equal && b == Verdict::equal) return candidate;
  return std::nullopt;
}

}  // namespace catcolim
