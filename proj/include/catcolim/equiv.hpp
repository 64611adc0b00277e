#pragma once

#include "catcolim/fpcat.hpp"

// Finiteness detection by normal-form enumeration, hom-set counting, and
// bounded search for equivalences between presented categories. Search
// results are untrusted until the checkers re-verify the witness.

namespace catcolim {

enum class Finiteness { finite, cap_exceeded, undecided };
const char* finiteness_name(Finiteness f);

struct FinitenessReport {
  Finiteness verdict = Finiteness::undecided;
  long arrow_count = 0;
  // representatives, sorted by (src, dst, shortlex); exact set of arrows
  // when verdict == finite
  std::vector<Word> normal_forms;

  std::vector<Word> hom(int src, int dst) const;
};

FinitenessReport enumerate_arrows(const CatPtr& cat, const Caps& caps = {});
// cached variant keyed on the presentation object
std::shared_ptr<const FinitenessReport> enumeration_for(const CatPtr& cat,
                                                        const Caps& caps = {});

struct HomCount {
  bool exact = false;
  long n = 0;
};
HomCount hom_count(const CatPtr& cat, const std::string& a, const std::string& b,
                   const Caps& caps = {});

// two-sided inverse of an arrow, when one can be found; verdict reports
// unknown when the search was inconclusive rather than negative
std::optional<Word> find_inverse_arrow(const CatPtr& cat, const Word& w,
                                       const Caps& caps = {},
                                       Verdict* verdict = nullptr);

// representative among the enumerated arrows equal to w; nullopt when the
// enumeration misses it or the oracle cannot decide
std::optional<Word> canonical_arrow(const CatPtr& cat, const Word& w,
                                    const Caps& caps = {});

struct EquivalenceWitness {
  FunctorPresentation fwd, bwd;
  NatTransfo eta;  // id_C => fwd;bwd
  NatTransfo eps;  // bwd;fwd => id_D
};

// trusted verifier: functor checks, naturality, invertibility, endpoint
// agreement. The search below never returns a witness that fails this.
Report verify_witness(const EquivalenceWitness& w, const Caps& caps = {});

struct SearchBound {
  int max_image_len = 4;
  long max_candidates = 1000000;
};

struct EquivResult {
  bool found = false;
  std::optional<EquivalenceWitness> witness;
  std::string note;
};

// exhaustive search over object maps and generator images drawn from the
// enumerated hom-sets; throws error{not_finite} when enumeration fails
EquivResult find_equivalence(const CatPtr& C, const CatPtr& D,
                             const SearchBound& bound = {},
                             const Caps& caps = {});

// promote a given functor to a witness: check full faithfulness and
// essential surjectivity against the enumerated arrows, construct a
// quasi-inverse with unit and counit, re-verify. nullopt when the functor
// is not an equivalence or something is undecided.
std::optional<EquivalenceWitness> upgrade_to_equivalence(
    const FunctorPresentation& fwd, const Caps& caps = {});

EquivalenceWitness swap_witness(const EquivalenceWitness& w);

// positional comparison modulo names: same object/generator/relation lists
// up to renaming by position
bool presentations_isomorphic(const FpCategory& A, const FpCategory& B);

}  // namespace catcolim
