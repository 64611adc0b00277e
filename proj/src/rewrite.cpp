#include <deque>
#include <map>
#include <queue>

#include "catcolim/fpcat.hpp"

// Completion on path words. Rules rewrite contiguous composable subwords
// and strictly decrease the shortlex order, so rewriting terminates even
// when the system is not confluent. Every rule carries a primitive
// derivation chain (relation and inverse-axiom applications) joining its
// two sides, which makes equality witnesses replayable.

namespace catcolim {

std::pair<Word, Word> axiom_sides(const FpCategory& cat, int axiom) {
  int n_rel = static_cast<int>(cat.relations.size());
  if (axiom < n_rel) {
    const Relation& r = cat.relations[static_cast<size_t>(axiom)];
    return {r.lhs, r.rhs};
  }
  int k = axiom - n_rel;
  int gen = k / 2;
  if (gen < 0 || gen >= static_cast<int>(cat.generators.size()) ||
      !cat.is_inverted(gen))
    throw error(errc::validation_error, "bad axiom index");
  const GenDecl& gd = cat.generators[static_cast<size_t>(gen)];
  Word lhs;
  if (k % 2 == 0) {  // g g^-1 -> id_src
    lhs.src = lhs.dst = gd.src;
    lhs.letters = {Letter{gen, false}, Letter{gen, true}};
    return {lhs, identity_word(gd.src)};
  }
  lhs.src = lhs.dst = gd.dst;  // g^-1 g -> id_dst
  lhs.letters = {Letter{gen, true}, Letter{gen, false}};
  return {lhs, identity_word(gd.dst)};
}

static bool segment_matches(const Word& w, int pos, const Word& pat) {
  if (pos + pat.letters.size() > w.letters.size()) return false;
  for (size_t i = 0; i < pat.letters.size(); ++i)
    if (!(w.letters[static_cast<size_t>(pos) + i] == pat.letters[i])) return false;
  return true;
}

// replace w[pos .. pos+from.size()) by `to`; endpoints follow from typing
static Word splice(const Word& w, int pos, const Word& from, const Word& to) {
  Word out;
  out.src = w.src;
  out.dst = w.dst;
  out.letters.reserve(w.letters.size() - from.letters.size() + to.letters.size());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  out.letters.insert(out.letters.end(), to.letters.begin(), to.letters.end());
  out.letters.insert(out.letters.end(),
                     w.letters.begin() + pos + static_cast<long>(from.letters.size()),
                     w.letters.end());
  return out;
}

// object sitting at boundary position p of w (before letter p)
static int boundary_object(const FpCategory& cat, const Word& w, int pos) {
  if (pos == 0) return w.src;
  return cat.letter_dst(w.letters[static_cast<size_t>(pos) - 1]);
}

Word apply_step(const FpCategory& cat, const Word& w, const Step& s) {
  auto [a, b] = axiom_sides(cat, s.axiom);
  const Word& from = s.forward ? a : b;
  const Word& to = s.forward ? b : a;
  if (s.pos < 0 || !segment_matches(w, s.pos, from) ||
      boundary_object(cat, w, s.pos) != from.src)
    throw error(errc::validation_error, "rewrite step does not apply");
  return splice(w, s.pos, from, to);
}

std::vector<Step> reversed_chain(const std::vector<Step>& chain) {
  std::vector<Step> out(chain.rbegin(), chain.rend());
  for (auto& s : out) s.forward = !s.forward;
  return out;
}

Word replay_chain(const FpCategory& cat, const Word& from,
                  const std::vector<Step>& chain) {
  Word cur = from;
  for (const auto& s : chain) cur = apply_step(cat, cur, s);
  return cur;
}

static std::vector<Step> shifted(const std::vector<Step>& chain, int offset) {
  std::vector<Step> out = chain;
  for (auto& s : out) s.pos += offset;
  return out;
}

NormalizeResult normalize_traced(const FpCategory& cat, const RewriteSystem& rs,
                                 const Word& w) {
  validate_word(cat, w);
  NormalizeResult res;
  res.nf = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pos = 0; pos <= static_cast<int>(res.nf.letters.size()) && !changed;
         ++pos) {
      for (const auto& rule : rs.rules) {
        if (rule.lhs.letters.empty()) continue;
        if (segment_matches(res.nf, pos, rule.lhs)) {
          auto steps = shifted(rule.chain, pos);
          res.nf = splice(res.nf, pos, rule.lhs, rule.rhs);
          res.steps.insert(res.steps.end(), steps.begin(), steps.end());
          changed = true;
          break;
        }
      }
    }
  }
  return res;
}

Word normalize(const FpCategory& cat, const RewriteSystem& rs, const Word& w) {
  validate_word(cat, w);
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pos = 0; pos <= static_cast<int>(cur.letters.size()) && !changed;
         ++pos) {
      for (const auto& rule : rs.rules) {
        if (rule.lhs.letters.empty()) continue;
        if (segment_matches(cur, pos, rule.lhs)) {
          cur = splice(cur, pos, rule.lhs, rule.rhs);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

namespace {

// pending equation with a primitive chain joining its sides
struct Equation {
  Word a, b;
  std::vector<Step> chain;  // a -> b
};

struct Completer {
  const FpCategory& cat;
  Caps caps;
  RewriteSystem work;
  std::deque<Equation> equations;
  std::deque<std::pair<size_t, size_t>> pairs;
  bool capped = false;

  explicit Completer(const FpCategory& c, const Caps& cp) : cat(c), caps(cp) {
    work.caps = cp;
  }

  std::vector<RewriteRule>& rules() { return work.rules; }

  NormalizeResult nf(const Word& w) const { return normalize_traced(cat, work, w); }

  void add_rule(RewriteRule r) {
    size_t idx = rules().size();
    rules().push_back(std::move(r));
    for (size_t j = 0; j <= idx; ++j) pairs.emplace_back(idx, j);
  }

  void push_seed_rules() {
    for (size_t g = 0; g < cat.generators.size(); ++g) {
      if (!cat.is_inverted(static_cast<int>(g))) continue;
      int base = static_cast<int>(cat.relations.size()) + 2 * static_cast<int>(g);
      for (int k = 0; k < 2; ++k) {
        auto [lhs, rhs] = axiom_sides(cat, base + k);
        add_rule(RewriteRule{lhs, rhs, {Step{0, base + k, true}}});
      }
    }
    for (size_t i = 0; i < cat.relations.size(); ++i) {
      const Relation& rel = cat.relations[i];
      equations.push_back(
          Equation{rel.lhs, rel.rhs, {Step{0, static_cast<int>(i), true}}});
    }
  }

  // turn one equation into a rule (or discard it when the sides join)
  void process_equation(Equation eq) {
    NormalizeResult na = nf(eq.a);
    NormalizeResult nb = nf(eq.b);
    if (na.nf == nb.nf) return;
    // chain na.nf -> nb.nf through eq.a -> eq.b
    std::vector<Step> chain = reversed_chain(na.steps);
    chain.insert(chain.end(), eq.chain.begin(), eq.chain.end());
    chain.insert(chain.end(), nb.steps.begin(), nb.steps.end());
    RewriteRule rule;
    if (shortlex_less(nb.nf, na.nf)) {
      rule = RewriteRule{na.nf, nb.nf, std::move(chain)};
    } else {
      rule = RewriteRule{nb.nf, na.nf, reversed_chain(chain)};
    }
    add_rule(std::move(rule));
  }

  // overlaps between lhs of rules i and j: j's lhs inside i's, and a proper
  // suffix of i's lhs equal to a proper prefix of j's
  void superpose(size_t i, size_t j) {
    const RewriteRule& ri = rules()[i];
    const RewriteRule& rj = rules()[j];
    const auto& li = ri.lhs.letters;
    const auto& lj = rj.lhs.letters;
    // containment
    if (lj.size() <= li.size()) {
      for (size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (i == j && p == 0 && lj.size() == li.size()) continue;
        if (!segment_matches(ri.lhs, static_cast<int>(p), rj.lhs)) continue;
        Word w = ri.lhs;
        Equation eq;
        eq.a = ri.rhs;
        eq.b = splice(w, static_cast<int>(p), rj.lhs, rj.rhs);
        eq.chain = reversed_chain(ri.chain);
        auto down = shifted(rj.chain, static_cast<int>(p));
        eq.chain.insert(eq.chain.end(), down.begin(), down.end());
        equations.push_back(std::move(eq));
      }
    }
    // proper overlap: suffix of li = prefix of lj
    size_t maxov = std::min(li.size(), lj.size());
    for (size_t k = 1; k < maxov; ++k) {
      bool match = true;
      for (size_t t = 0; t < k; ++t)
        if (!(li[li.size() - k + t] == lj[t])) { match = false; break; }
      if (!match) continue;
      Word w;
      w.src = ri.lhs.src;
      w.dst = rj.lhs.dst;
      w.letters = li;
      w.letters.insert(w.letters.end(), lj.begin() + static_cast<long>(k), lj.end());
      Equation eq;
      // reduce by i at 0 and by j at |li| - k
      Word tail;
      tail.src = ri.lhs.dst;
      tail.dst = w.dst;
      tail.letters.assign(lj.begin() + static_cast<long>(k), lj.end());
      eq.a = concat(cat, ri.rhs, tail);
      eq.b = splice(w, static_cast<int>(li.size() - k), rj.lhs, rj.rhs);
      eq.chain = reversed_chain(ri.chain);
      auto down = shifted(rj.chain, static_cast<int>(li.size() - k));
      eq.chain.insert(eq.chain.end(), down.begin(), down.end());
      equations.push_back(std::move(eq));
    }
  }

  RewriteSystem run() {
    push_seed_rules();
    long spins = 0;
    while (!equations.empty() || !pairs.empty()) {
      if (static_cast<int>(rules().size()) > caps.max_rules ||
          ++spins > caps.max_bfs_nodes) {
        capped = true;
        break;
      }
      if (!equations.empty()) {
        Equation eq = std::move(equations.front());
        equations.pop_front();
        process_equation(std::move(eq));
        continue;
      }
      auto [i, j] = pairs.front();
      pairs.pop_front();
      superpose(i, j);
      if (i != j) superpose(j, i);
    }
    work.complete = !capped;
    return work;
  }
};

}  // namespace

RewriteSystem complete(const FpCategory& cat, const Caps& caps) {
  Completer c(cat, caps);
  return c.run();
}

namespace {

struct WordKey {
  bool operator()(const Word& a, const Word& b) const {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return shortlex_less(a, b);
  }
};

}  // namespace

EqResult equal_words(const FpCategory& cat, const RewriteSystem& rs,
                     const Word& u, const Word& v) {
  validate_word(cat, u);
  validate_word(cat, v);
  if (u.src != v.src || u.dst != v.dst)
    throw error(errc::not_parallel, "words are not parallel");
  NormalizeResult nu = normalize_traced(cat, rs, u);
  NormalizeResult nv = normalize_traced(cat, rs, v);
  if (nu.nf == nv.nf) {
    EqResult res;
    res.verdict = Verdict::equal;
    res.witness = nu.steps;
    auto back = reversed_chain(nv.steps);
    res.witness.insert(res.witness.end(), back.begin(), back.end());
    return res;
  }
  if (rs.complete) return EqResult{Verdict::unequal, {}};

  // class enumeration from nu.nf; sound Unequal only when the class closed
  // without any move truncated by the length cap
  int n_axioms = static_cast<int>(cat.relations.size());
  std::vector<int> axioms;
  for (int i = 0; i < n_axioms; ++i) axioms.push_back(i);
  for (size_t g = 0; g < cat.generators.size(); ++g)
    if (cat.is_inverted(static_cast<int>(g))) {
      axioms.push_back(n_axioms + 2 * static_cast<int>(g));
      axioms.push_back(n_axioms + 2 * static_cast<int>(g) + 1);
    }

  std::map<Word, std::pair<Word, Step>, WordKey> parent;
  std::deque<Word> frontier;
  parent.emplace(nu.nf, std::make_pair(nu.nf, Step{}));
  frontier.push_back(nu.nf);
  bool truncated = false;
  long nodes = 0;
  bool found = false;
  while (!frontier.empty() && !found) {
    Word cur = frontier.front();
    frontier.pop_front();
    if (++nodes > rs.caps.max_bfs_nodes) {
      truncated = true;
      break;
    }
    auto consider = [&](const Word& next, const Step& step) {
      if (static_cast<int>(next.letters.size()) > rs.caps.max_word_len) {
        truncated = true;
        return;
      }
      if (parent.count(next)) return;
      parent.emplace(next, std::make_pair(cur, step));
      frontier.push_back(next);
      if (next == nv.nf) found = true;
    };
    for (int ax : axioms) {
      auto [a, b] = axiom_sides(cat, ax);
      for (int dir = 0; dir < 2 && !found; ++dir) {
        const Word& from = dir == 0 ? a : b;
        const Word& to = dir == 0 ? b : a;
        for (int pos = 0;
             pos + static_cast<int>(from.letters.size()) <=
                 static_cast<int>(cur.letters.size()) && !found;
             ++pos) {
          if (!segment_matches(cur, pos, from)) continue;
          if (boundary_object(cat, cur, pos) != from.src) continue;
          consider(splice(cur, pos, from, to), Step{pos, ax, dir == 0});
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (found) {
    std::vector<Step> path;
    Word cur = nv.nf;
    while (!(cur == nu.nf)) {
      auto it = parent.find(cur);
      path.push_back(it->second.second);
      cur = it->second.first;
    }
    std::reverse(path.begin(), path.end());
    EqResult res;
    res.verdict = Verdict::equal;
    res.witness = nu.steps;
    res.witness.insert(res.witness.end(), path.begin(), path.end());
    auto back = reversed_chain(nv.steps);
    res.witness.insert(res.witness.end(), back.begin(), back.end());
    return res;
  }
  if (!truncated && frontier.empty()) return EqResult{Verdict::unequal, {}};
  return EqResult{Verdict::unknown, {}};
}

}  // namespace catcolim
