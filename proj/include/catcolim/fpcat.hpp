#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

// Finitely presented categories, path words over their generators, a
// Knuth-Bendix style completion engine for the word problem, and the
// functor / natural-transformation layer built on top of it.
//
// Composition order is diagrammatic everywhere: the word `f.g` means
// "first f, then g".

namespace catcolim {

enum class errc {
  word_malformed,
  not_parallel,
  unknown_generator,
  unknown_object,
  index_not_finite,
  value_not_finite,
  invalid_diagram,
  invalid_weight,
  index_mismatch,
  not_finite,
  undecided,
  cap_exceeded,
  parse_error,
  resolve_error,
  validation_error,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  errc code;
};

const char* errc_name(errc c);

// Resource caps. Nontermination of completion or class enumeration is
// reported through verdicts, never by hanging.
struct Caps {
  int max_rules = 10000;
  int max_word_len = 32;
  long max_bfs_nodes = 200000;

  bool operator==(const Caps&) const = default;
};

// One signed generator occurrence. `inv` selects the formal inverse and is
// only legal on generators declared invertible.
struct Letter {
  std::int32_t gen = -1;
  bool inv = false;

  bool operator==(const Letter&) const = default;
  // shortlex key: declaration order, plain before inverse
  int key() const { return gen * 2 + (inv ? 1 : 0); }
};

// A composable path. Empty letter list with src == dst is an identity.
struct Word {
  int src = -1;
  int dst = -1;
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

struct GenDecl {
  std::string name;
  int src = -1;
  int dst = -1;
};

struct Relation {
  Word lhs, rhs;
};

class FpCategory {
public:
  std::string label;
  std::vector<std::string> objects;
  std::vector<GenDecl> generators;
  std::vector<Relation> relations;
  std::vector<char> inverted;  // per generator

  int object_index(const std::string& name) const;
  int generator_index(const std::string& name) const;
  bool is_inverted(int gen) const { return inverted[static_cast<size_t>(gen)] != 0; }

  // endpoints of a letter, inverse letters swap them
  int letter_src(const Letter& l) const;
  int letter_dst(const Letter& l) const;

private:
  friend class FpCategoryBuilder;
  std::unordered_map<std::string, int> object_lookup_;
  std::unordered_map<std::string, int> generator_lookup_;
};

using CatPtr = std::shared_ptr<const FpCategory>;

// Validating builder; `build` throws error{validation_error} on broken
// invariants (unknown endpoints, name clashes, non-parallel relations).
class FpCategoryBuilder {
public:
  explicit FpCategoryBuilder(std::string label = "");
  FpCategoryBuilder& object(const std::string& name);
  FpCategoryBuilder& gen(const std::string& name, const std::string& src,
                         const std::string& dst);
  // words given as signed letter names; empty word needs the object instead
  FpCategoryBuilder& relation(const Word& lhs, const Word& rhs);
  FpCategoryBuilder& invert(const std::string& gen_name);
  // helpers usable before build(): resolve names on the partial category
  Word word(const std::vector<std::pair<std::string, bool>>& letters) const;
  Word word(const std::string& dotted) const;  // "f.g.h^-1" or "id(a)"
  CatPtr build();

private:
  std::shared_ptr<FpCategory> cat_;
  bool built_ = false;
};

// ---- word operations --------------------------------------------------

Word identity_word(int obj);
void validate_word(const FpCategory& cat, const Word& w);
Word concat(const FpCategory& cat, const Word& u, const Word& v);
Word concat(const FpCategory& cat, std::initializer_list<Word> parts);
bool word_flippable(const FpCategory& cat, const Word& w);
Word word_inverse(const FpCategory& cat, const Word& w);  // requires flippable
bool shortlex_less(const Word& a, const Word& b);
std::string word_name(const FpCategory& cat, const Word& w);
Word parse_word_name(const FpCategory& cat, const std::string& text);

// ---- rewriting --------------------------------------------------------

// A primitive rewriting step on a word. `axiom` indexes the category's
// relation list; values >= relations.size() encode the implicit inverse
// axioms, in pairs: R + 2g is (g g^-1 -> id_src), R + 2g + 1 is
// (g^-1 g -> id_dst). `forward` false applies the axiom right-to-left.
struct Step {
  int pos = 0;
  int axiom = 0;
  bool forward = true;
};

std::pair<Word, Word> axiom_sides(const FpCategory& cat, int axiom);
Word apply_step(const FpCategory& cat, const Word& w, const Step& s);
std::vector<Step> reversed_chain(const std::vector<Step>& chain);
// replays `chain` on `from`, throws validation_error on mismatch
Word replay_chain(const FpCategory& cat, const Word& from,
                  const std::vector<Step>& chain);

struct RewriteRule {
  Word lhs, rhs;
  std::vector<Step> chain;  // primitive derivation lhs -> rhs
};

struct RewriteSystem {
  std::vector<RewriteRule> rules;
  bool complete = false;
  Caps caps;
};

RewriteSystem complete(const FpCategory& cat, const Caps& caps = {});

struct NormalizeResult {
  Word nf;
  std::vector<Step> steps;
};
NormalizeResult normalize_traced(const FpCategory& cat, const RewriteSystem& rs,
                                 const Word& w);
Word normalize(const FpCategory& cat, const RewriteSystem& rs, const Word& w);

enum class Verdict { equal, unequal, unknown };
const char* verdict_name(Verdict v);

struct EqResult {
  Verdict verdict = Verdict::unknown;
  std::vector<Step> witness;  // u -> v when verdict == equal
};
EqResult equal_words(const FpCategory& cat, const RewriteSystem& rs,
                     const Word& u, const Word& v);

// ---- cached engines ---------------------------------------------------

// Completion is deterministic in (presentation, caps); engines are shared
// so repeated checks against one category complete it once.
class Engine {
public:
  Engine(CatPtr cat, const Caps& caps);
  const FpCategory& cat() const { return *cat_; }
  CatPtr cat_ptr() const { return cat_; }
  const Caps& caps() const { return caps_; }
  const RewriteSystem& rs() const { return rs_; }

  Word nf(const Word& w) const { return normalize(*cat_, rs_, w); }
  EqResult eq(const Word& u, const Word& v) const {
    return equal_words(*cat_, rs_, u, v);
  }
  Verdict eq_verdict(const Word& u, const Word& v) const {
    return eq(u, v).verdict;
  }

private:
  CatPtr cat_;
  Caps caps_;
  RewriteSystem rs_;
};

using EnginePtr = std::shared_ptr<const Engine>;
EnginePtr engine_for(const CatPtr& cat, const Caps& caps = {});

// ---- functors and transformations --------------------------------------

struct FunctorPresentation {
  CatPtr source, target;
  std::vector<int> object_map;       // per source object
  std::vector<Word> generator_map;   // per source generator
  // explicit image of the formal inverse, for inverted source generators
  // whose image word is not letterwise flippable
  std::vector<std::optional<Word>> inverse_map;

  int on_object(int o) const { return object_map[static_cast<size_t>(o)]; }
};

FunctorPresentation identity_functor(const CatPtr& cat);
bool is_identity_functor(const FunctorPresentation& f);
// image of the formal inverse of generator g
Word inverse_image(const FunctorPresentation& f, int gen);
Word apply(const FunctorPresentation& f, const Word& w);
// diagrammatic: first f, then g
FunctorPresentation compose(const FunctorPresentation& f,
                            const FunctorPresentation& g);

struct NatTransfo {
  FunctorPresentation src_fun, dst_fun;
  std::vector<Word> components;  // per source object, src_fun(x) -> dst_fun(x)
  std::optional<std::vector<Word>> inverse_components;

  bool invertible() const { return inverse_components.has_value(); }
};

NatTransfo identity_nat(const FunctorPresentation& f);

// ---- checkers ----------------------------------------------------------

struct CheckEntry {
  std::string where;
  Verdict verdict = Verdict::unequal;
  std::string detail;
};

struct Report {
  std::vector<CheckEntry> entries;  // only failures and unknowns
  int checked = 0;

  bool ok() const { return entries.empty(); }
  bool has_unknown() const;
  std::string summary() const;
  void add(std::string where, Verdict v, std::string detail);
  void merge(const Report& other, const std::string& prefix);
};

Report check_functor(const FunctorPresentation& f, const Caps& caps = {});
Report check_natural(const NatTransfo& t, const Caps& caps = {});

// object maps must agree exactly; generator images compared by the target
// oracle. unknown if any comparison is undecided.
Verdict functors_equal(const FunctorPresentation& f,
                       const FunctorPresentation& g, const Caps& caps = {});

}  // namespace catcolim
