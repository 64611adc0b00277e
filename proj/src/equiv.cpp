#include "catcolim/equiv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace catcolim {

const char* finiteness_name(Finiteness f) {
  switch (f) {
    case Finiteness::finite: return "Finite";
    case Finiteness::cap_exceeded: return "CapExceeded";
    case Finiteness::undecided: return "Undecided";
  }
  return "?";
}

std::vector<Word> FinitenessReport::hom(int src, int dst) const {
  std::vector<Word> out;
  for (const auto& w : normal_forms)
    if (w.src == src && w.dst == dst) out.push_back(w);
  return out;
}

namespace {

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return shortlex_less(a, b);
  }
};

}  // namespace

FinitenessReport enumerate_arrows(const CatPtr& cat, const Caps& caps) {
  auto eng = engine_for(cat, caps);
  FinitenessReport rep;
  std::set<Word, WordLess> seen;
  std::vector<Word> frontier;
  for (size_t o = 0; o < cat->objects.size(); ++o) {
    Word id = identity_word(static_cast<int>(o));
    seen.insert(id);
    frontier.push_back(id);
  }
  std::vector<Letter> alphabet;
  for (size_t g = 0; g < cat->generators.size(); ++g) {
    alphabet.push_back(Letter{static_cast<int>(g), false});
    if (cat->is_inverted(static_cast<int>(g)))
      alphabet.push_back(Letter{static_cast<int>(g), true});
  }
  auto capped = [&] {
    rep.verdict = Finiteness::cap_exceeded;
    rep.arrow_count = static_cast<long>(seen.size());
    rep.normal_forms.assign(seen.begin(), seen.end());  // partial lower bound
    return rep;
  };
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& l : alphabet) {
        if (cat->letter_src(l) != w.dst) continue;
        Word e = w;
        e.letters.push_back(l);
        e.dst = cat->letter_dst(l);
        if (static_cast<int>(e.letters.size()) > caps.max_word_len) return capped();
        Word nf = eng->nf(e);
        if (seen.insert(nf).second) {
          next.push_back(nf);
          if (static_cast<long>(seen.size()) > caps.max_bfs_nodes) return capped();
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> forms(seen.begin(), seen.end());
  if (!eng->rs().complete) {
    // distinct normal forms may still be the same arrow; merge what the
    // oracle can decide, give up on unknowns
    std::vector<Word> reps;
    for (const auto& w : forms) {
      bool dup = false;
      for (const auto& r : reps) {
        if (r.src != w.src || r.dst != w.dst) continue;
        Verdict v = eng->eq_verdict(r, w);
        if (v == Verdict::equal) {
          dup = true;
          break;
        }
        if (v == Verdict::unknown) {
          rep.verdict = Finiteness::undecided;
          rep.arrow_count = static_cast<long>(forms.size());
          rep.normal_forms = forms;
          return rep;
        }
      }
      if (!dup) reps.push_back(w);
    }
    forms = std::move(reps);
  }
  rep.verdict = Finiteness::finite;
  rep.normal_forms = std::move(forms);
  rep.arrow_count = static_cast<long>(rep.normal_forms.size());
  return rep;
}

std::shared_ptr<const FinitenessReport> enumeration_for(const CatPtr& cat,
                                                        const Caps& caps) {
  struct Slot {
    std::weak_ptr<const FpCategory> key;
    Caps caps;
    std::shared_ptr<const FinitenessReport> report;
  };
  static std::mutex mu;
  static std::unordered_map<const FpCategory*, Slot> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cat.get());
    if (it != cache.end() && it->second.key.lock() == cat && it->second.caps == caps)
      return it->second.report;
  }
  auto rep = std::make_shared<const FinitenessReport>(enumerate_arrows(cat, caps));
  std::lock_guard<std::mutex> lock(mu);
  cache[cat.get()] = Slot{cat, caps, rep};
  return rep;
}

HomCount hom_count(const CatPtr& cat, const std::string& a, const std::string& b,
                   const Caps& caps) {
  int sa = cat->object_index(a);
  int sb = cat->object_index(b);
  if (sa < 0 || sb < 0)
    throw error(errc::unknown_object, "hom_count: unknown object");
  auto rep = enumeration_for(cat, caps);
  if (rep->verdict == Finiteness::finite) {
    return HomCount{true, static_cast<long>(rep->hom(sa, sb).size())};
  }
  // lower bound: a greedy pairwise provably-distinct subset
  auto eng = engine_for(cat, caps);
  std::vector<Word> distinct;
  for (const auto& w : rep->normal_forms) {
    if (w.src != sa || w.dst != sb) continue;
    bool separate = true;
    for (const auto& d : distinct)
      if (eng->eq_verdict(d, w) != Verdict::unequal) {
        separate = false;
        break;
      }
    if (separate) distinct.push_back(w);
  }
  return HomCount{false, static_cast<long>(distinct.size())};
}

std::optional<Word> canonical_arrow(const CatPtr& cat, const Word& w,
                                    const Caps& caps) {
  auto eng = engine_for(cat, caps);
  Word nf = eng->nf(w);
  if (eng->rs().complete) return nf;
  auto rep = enumeration_for(cat, caps);
  for (const auto& r : rep->hom(w.src, w.dst)) {
    Verdict v = eng->eq_verdict(r, nf);
    if (v == Verdict::equal) return r;
    if (v == Verdict::unknown) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Word> find_inverse_arrow(const CatPtr& cat, const Word& w,
                                       const Caps& caps, Verdict* verdict) {
  if (verdict) *verdict = Verdict::unequal;
  if (word_flippable(*cat, w)) {
    if (verdict) *verdict = Verdict::equal;
    return word_inverse(*cat, w);
  }
  auto rep = enumeration_for(cat, caps);
  if (rep->verdict != Finiteness::finite) {
    if (verdict) *verdict = Verdict::unknown;
    return std::nullopt;
  }
  auto eng = engine_for(cat, caps);
  bool saw_unknown = false;
  for (const auto& v : rep->hom(w.dst, w.src)) {
    Verdict a = eng->eq_verdict(concat(*cat, w, v), identity_word(w.src));
    Verdict b = eng->eq_verdict(concat(*cat, v, w), identity_word(w.dst));
    if (a == Verdict::equal && b == Verdict::equal) {
      if (verdict) *verdict = Verdict::equal;
      return v;
    }
    if (a == Verdict::unknown || b == Verdict::unknown) saw_unknown = true;
  }
  if (verdict) *verdict = saw_unknown ? Verdict::unknown : Verdict::unequal;
  return std::nullopt;
}

// ---- witness verification ------------------------------------------------

Report verify_witness(const EquivalenceWitness& w, const Caps& caps) {
  Report rep;
  if (w.fwd.source != w.bwd.target || w.fwd.target != w.bwd.source) {
    rep.add("shape", Verdict::unequal, "fwd/bwd endpoints do not match");
    return rep;
  }
  rep.merge(check_functor(w.fwd, caps), "fwd: ");
  rep.merge(check_functor(w.bwd, caps), "bwd: ");
  if (!rep.ok()) return rep;

  auto check_endpoints = [&](const NatTransfo& t, const FunctorPresentation& s,
                             const FunctorPresentation& d, const char* name) {
    ++rep.checked;
    if (functors_equal(t.src_fun, s, caps) != Verdict::equal ||
        functors_equal(t.dst_fun, d, caps) != Verdict::equal)
      rep.add(name, Verdict::unequal, "endpoint functors are not the expected composites");
    ++rep.checked;
    if (!t.invertible())
      rep.add(name, Verdict::unequal, "transformation lacks an inverse family");
  };
  check_endpoints(w.eta, identity_functor(w.fwd.source),
                  compose(w.fwd, w.bwd), "eta");
  check_endpoints(w.eps, compose(w.bwd, w.fwd),
                  identity_functor(w.bwd.source), "eps");
  if (!rep.ok()) return rep;
  rep.merge(check_natural(w.eta, caps), "eta: ");
  rep.merge(check_natural(w.eps, caps), "eps: ");
  return rep;
}

EquivalenceWitness swap_witness(const EquivalenceWitness& w) {
  EquivalenceWitness s;
  s.fwd = w.bwd;
  s.bwd = w.fwd;
  if (!w.eps.invertible() || !w.eta.invertible())
    throw error(errc::validation_error, "swap needs invertible unit and counit");
  s.eta.src_fun = identity_functor(w.bwd.source);
  s.eta.dst_fun = compose(w.bwd, w.fwd);
  s.eta.components = *w.eps.inverse_components;
  s.eta.inverse_components = w.eps.components;
  s.eps.src_fun = compose(w.fwd, w.bwd);
  s.eps.dst_fun = identity_functor(w.fwd.source);
  s.eps.components = *w.eta.inverse_components;
  s.eps.inverse_components = w.eta.components;
  return s;
}

bool presentations_isomorphic(const FpCategory& A, const FpCategory& B) {
  if (A.objects.size() != B.objects.size()) return false;
  if (A.generators.size() != B.generators.size()) return false;
  if (A.relations.size() != B.relations.size()) return false;
  for (size_t g = 0; g < A.generators.size(); ++g) {
    if (A.generators[g].src != B.generators[g].src) return false;
    if (A.generators[g].dst != B.generators[g].dst) return false;
    if (A.inverted[g] != B.inverted[g]) return false;
  }
  for (size_t r = 0; r < A.relations.size(); ++r) {
    if (!(A.relations[r].lhs == B.relations[r].lhs)) return false;
    if (!(A.relations[r].rhs == B.relations[r].rhs)) return false;
  }
  return true;
}

// ---- equivalence search ----------------------------------------------------

namespace {

struct SearchContext {
  CatPtr C, D;
  Caps caps;
  SearchBound bound;
  EnginePtr engC, engD;
  std::shared_ptr<const FinitenessReport> enC, enD;
  // invertible arrows of D with chosen inverses
  std::map<Word, Word, WordLess> d_inverses;
  long budget = 0;

  std::vector<Word> homC(int a, int b) const { return enC->hom(a, b); }
  std::vector<Word> homD(int a, int b) const { return enD->hom(a, b); }

  std::optional<Word> canonical_in_D(const Word& w) const {
    return canonical_arrow(D, w, caps);
  }
};

EquivalenceWitness renaming_witness(const CatPtr& C, const CatPtr& D) {
  EquivalenceWitness w;
  w.fwd.source = C;
  w.fwd.target = D;
  w.fwd.object_map.resize(C->objects.size());
  for (size_t i = 0; i < C->objects.size(); ++i)
    w.fwd.object_map[i] = static_cast<int>(i);
  for (size_t g = 0; g < C->generators.size(); ++g) {
    Word img;
    img.src = C->generators[g].src;
    img.dst = C->generators[g].dst;
    img.letters.push_back(Letter{static_cast<int>(g), false});
    w.fwd.generator_map.push_back(img);
  }
  w.fwd.inverse_map.assign(C->generators.size(), std::nullopt);
  w.bwd = w.fwd;
  w.bwd.source = D;
  w.bwd.target = C;
  w.eta.src_fun = identity_functor(C);
  w.eta.dst_fun = compose(w.fwd, w.bwd);
  for (size_t i = 0; i < C->objects.size(); ++i)
    w.eta.components.push_back(identity_word(static_cast<int>(i)));
  w.eta.inverse_components = w.eta.components;
  w.eps.src_fun = compose(w.bwd, w.fwd);
  w.eps.dst_fun = identity_functor(D);
  w.eps.components = w.eta.components;
  w.eps.inverse_components = w.eta.components;
  return w;
}

// quasi-inverse data built from a fully faithful essentially surjective fwd
std::optional<EquivalenceWitness> complete_witness(
    SearchContext& ctx, const FunctorPresentation& fwd) {
  const FpCategory& C = *ctx.C;
  const FpCategory& D = *ctx.D;
  EquivalenceWitness w;
  w.fwd = fwd;

  // section on objects: x_e with invertible alpha_e : fwd(x_e) -> e
  std::vector<int> x_of(D.objects.size(), -1);
  std::vector<Word> alpha(D.objects.size());
  std::vector<Word> alpha_inv(D.objects.size());
  for (size_t e = 0; e < D.objects.size(); ++e) {
    for (size_t x = 0; x < C.objects.size() && x_of[e] < 0; ++x) {
      if (fwd.on_object(static_cast<int>(x)) == static_cast<int>(e)) {
        x_of[e] = static_cast<int>(x);
        alpha[e] = identity_word(static_cast<int>(e));
        alpha_inv[e] = alpha[e];
      }
    }
    for (size_t x = 0; x < C.objects.size() && x_of[e] < 0; ++x) {
      for (const auto& a : ctx.homD(fwd.on_object(static_cast<int>(x)),
                                    static_cast<int>(e))) {
        auto it = ctx.d_inverses.find(a);
        if (it == ctx.d_inverses.end()) continue;
        x_of[e] = static_cast<int>(x);
        alpha[e] = a;
        alpha_inv[e] = it->second;
        break;
      }
    }
    if (x_of[e] < 0) return std::nullopt;  // not essentially surjective
  }

  w.bwd.source = ctx.D;
  w.bwd.target = ctx.C;
  w.bwd.object_map.assign(x_of.begin(), x_of.end());
  w.bwd.generator_map.resize(D.generators.size());
  w.bwd.inverse_map.assign(D.generators.size(), std::nullopt);

  // unique preimage of a D-word under fwd, found by scanning a C hom-set
  auto preimage = [&](int cx, int cy, const Word& target) -> std::optional<Word> {
    for (const auto& u : ctx.homC(cx, cy)) {
      Verdict v = ctx.engD->eq_verdict(apply(fwd, u), target);
      if (v == Verdict::equal) return u;
    }
    return std::nullopt;
  };

  for (size_t h = 0; h < D.generators.size(); ++h) {
    const GenDecl& gd = D.generators[h];
    Word hw;
    hw.src = gd.src;
    hw.dst = gd.dst;
    hw.letters.push_back(Letter{static_cast<int>(h), false});
    Word target = concat(D, {alpha[static_cast<size_t>(gd.src)], hw,
                             alpha_inv[static_cast<size_t>(gd.dst)]});
    auto u = preimage(x_of[static_cast<size_t>(gd.src)],
                      x_of[static_cast<size_t>(gd.dst)], target);
    if (!u) return std::nullopt;
    w.bwd.generator_map[h] = *u;
    if (D.is_inverted(static_cast<int>(h)) && !word_flippable(C, *u)) {
      Word hinv = word_inverse(D, hw);
      Word target2 = concat(D, {alpha[static_cast<size_t>(gd.dst)], hinv,
                                alpha_inv[static_cast<size_t>(gd.src)]});
      auto u2 = preimage(x_of[static_cast<size_t>(gd.dst)],
                         x_of[static_cast<size_t>(gd.src)], target2);
      if (!u2) return std::nullopt;
      w.bwd.inverse_map[h] = *u2;
    }
  }

  // eta_x : x -> x_{fwd(x)} with fwd(eta_x) = alpha^-1 at fwd(x)
  w.eta.src_fun = identity_functor(ctx.C);
  w.eta.dst_fun = compose(w.fwd, w.bwd);
  w.eta.components.resize(C.objects.size());
  std::vector<Word> eta_inv(C.objects.size());
  for (size_t x = 0; x < C.objects.size(); ++x) {
    int e = fwd.on_object(static_cast<int>(x));
    int xe = x_of[static_cast<size_t>(e)];
    auto u = preimage(static_cast<int>(x), xe, alpha_inv[static_cast<size_t>(e)]);
    if (!u) return std::nullopt;
    // the inverse lives in C; scan for it
    std::optional<Word> v;
    for (const auto& cand : ctx.homC(xe, static_cast<int>(x))) {
      if (ctx.engC->eq_verdict(concat(C, *u, cand),
                               identity_word(static_cast<int>(x))) ==
              Verdict::equal &&
          ctx.engC->eq_verdict(concat(C, cand, *u), identity_word(xe)) ==
              Verdict::equal) {
        v = cand;
        break;
      }
    }
    if (!v) return std::nullopt;
    w.eta.components[x] = *u;
    eta_inv[x] = *v;
  }
  w.eta.inverse_components = eta_inv;

  w.eps.src_fun = compose(w.bwd, w.fwd);
  w.eps.dst_fun = identity_functor(ctx.D);
  w.eps.components.assign(alpha.begin(), alpha.end());
  w.eps.inverse_components = std::vector<Word>(alpha_inv.begin(), alpha_inv.end());
  return w;
}

bool fully_faithful(SearchContext& ctx, const FunctorPresentation& fwd) {
  const FpCategory& C = *ctx.C;
  for (size_t x = 0; x < C.objects.size(); ++x) {
    for (size_t y = 0; y < C.objects.size(); ++y) {
      auto hc = ctx.homC(static_cast<int>(x), static_cast<int>(y));
      auto hd = ctx.homD(fwd.on_object(static_cast<int>(x)),
                         fwd.on_object(static_cast<int>(y)));
      if (hc.size() != hd.size()) return false;
      std::set<Word, WordLess> images;
      for (const auto& u : hc) {
        auto rep = ctx.canonical_in_D(apply(fwd, u));
        if (!rep) return false;
        images.insert(*rep);
      }
      if (images.size() != hd.size()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<EquivalenceWitness> upgrade_to_equivalence(
    const FunctorPresentation& fwd, const Caps& caps) {
  SearchContext ctx;
  ctx.C = fwd.source;
  ctx.D = fwd.target;
  ctx.caps = caps;
  ctx.engC = engine_for(ctx.C, caps);
  ctx.engD = engine_for(ctx.D, caps);
  ctx.enC = enumeration_for(ctx.C, caps);
  ctx.enD = enumeration_for(ctx.D, caps);
  if (ctx.enC->verdict != Finiteness::finite ||
      ctx.enD->verdict != Finiteness::finite)
    throw error(errc::not_finite, "upgrade needs finite categories");
  for (const auto& a : ctx.enD->normal_forms) {
    auto inv = find_inverse_arrow(ctx.D, a, caps);
    if (inv) ctx.d_inverses.emplace(a, *inv);
  }
  if (!check_functor(fwd, caps).ok()) return std::nullopt;
  if (!fully_faithful(ctx, fwd)) return std::nullopt;
  auto w = complete_witness(ctx, fwd);
  if (!w || !verify_witness(*w, caps).ok()) return std::nullopt;
  return w;
}

EquivResult find_equivalence(const CatPtr& C, const CatPtr& D,
                             const SearchBound& bound, const Caps& caps) {
  // fast pre-pass: identical presentations up to renaming
  if (presentations_isomorphic(*C, *D)) {
    EquivalenceWitness w = renaming_witness(C, D);
    if (verify_witness(w, caps).ok())
      return EquivResult{true, std::move(w), "isomorphic presentations"};
  }

  SearchContext ctx;
  ctx.C = C;
  ctx.D = D;
  ctx.caps = caps;
  ctx.bound = bound;
  ctx.engC = engine_for(C, caps);
  ctx.engD = engine_for(D, caps);
  ctx.enC = enumeration_for(C, caps);
  ctx.enD = enumeration_for(D, caps);
  if (ctx.enC->verdict != Finiteness::finite ||
      ctx.enD->verdict != Finiteness::finite)
    throw error(errc::not_finite, "equivalence search needs finite categories");
  ctx.budget = bound.max_candidates;

  for (const auto& a : ctx.enD->normal_forms) {
    if (static_cast<int>(a.letters.size()) > bound.max_image_len) continue;
    auto inv = find_inverse_arrow(D, a, caps);
    if (inv) ctx.d_inverses.emplace(a, *inv);
  }

  size_t n_cobj = C->objects.size();
  size_t n_dobj = D->objects.size();
  size_t n_gen = C->generators.size();
  if (n_dobj == 0 && n_cobj > 0) return EquivResult{false, std::nullopt, "target empty"};

  std::vector<int> om(n_cobj, 0);
  bool exhausted_budget = false;
  while (true) {
    FunctorPresentation fwd;
    fwd.source = C;
    fwd.target = D;
    fwd.object_map = om;
    // candidate images per generator
    std::vector<std::vector<Word>> cands(n_gen);
    bool feasible = true;
    for (size_t g = 0; g < n_gen && feasible; ++g) {
      const GenDecl& gd = C->generators[g];
      for (const auto& a :
           ctx.homD(om[static_cast<size_t>(gd.src)], om[static_cast<size_t>(gd.dst)])) {
        if (static_cast<int>(a.letters.size()) > bound.max_image_len) continue;
        if (C->is_inverted(static_cast<int>(g)) && !word_flippable(*D, a) &&
            !ctx.d_inverses.count(a))
          continue;
        cands[g].push_back(a);
      }
      if (cands[g].empty()) feasible = false;
    }
    if (feasible) {
      std::vector<size_t> pick(n_gen, 0);
      bool more = true;
      while (more) {
        if (--ctx.budget < 0) {
          exhausted_budget = true;
          break;
        }
        fwd.generator_map.clear();
        fwd.inverse_map.assign(n_gen, std::nullopt);
        for (size_t g = 0; g < n_gen; ++g) {
          const Word& img = cands[g][pick[g]];
          fwd.generator_map.push_back(img);
          if (C->is_inverted(static_cast<int>(g)) && !word_flippable(*D, img))
            fwd.inverse_map[g] = ctx.d_inverses.at(img);
        }
        if (check_functor(fwd, caps).ok() && fully_faithful(ctx, fwd)) {
          auto w = complete_witness(ctx, fwd);
          if (w && verify_witness(*w, caps).ok())
            return EquivResult{true, std::move(*w), ""};
        }
        // next assignment
        more = false;
        for (size_t g = 0; g < n_gen; ++g) {
          if (++pick[g] < cands[g].size()) {
            more = true;
            break;
          }
          pick[g] = 0;
        }
        if (n_gen == 0) break;  // single empty assignment
      }
      if (exhausted_budget) break;
    }
    // next object map
    bool carried = false;
    for (size_t i = 0; i < n_cobj; ++i) {
      if (++om[i] < static_cast<int>(n_dobj)) {
        carried = true;
        break;
      }
      om[i] = 0;
    }
    if (!carried) break;
    if (n_cobj == 0) break;
  }
  return EquivResult{false, std::nullopt,
                     exhausted_budget ? "NotFoundWithinBound: candidate budget exhausted"
                                      : "NotFoundWithinBound"};
}

}  // namespace catcolim
