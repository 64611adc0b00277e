#pragma once

#include "catcolim/groth.hpp"

// Localization of presented categories at generator classes, and the
// sigma- and weighted-bicolimit pipelines built from it. Localization is
// presentation-level: targeted generators gain formal inverses and the
// word problem is re-completed downstream.

namespace catcolim {

struct LocalizationResult {
  CatPtr original;
  CatPtr localized;  // same presentation when no targets
  FunctorPresentation quotient;  // original -> localized, identity on names
  std::vector<int> targets;
};

LocalizationResult invert(const CatPtr& cat, const std::vector<int>& targets);
LocalizationResult invert(const CatPtr& cat, const std::vector<std::string>& targets);

struct SigmaColimResult {
  GrothendieckResult groth;
  LocalizationResult loc;
  std::vector<FunctorPresentation> cocone;  // fiber(i) -> localized total
  std::vector<NatTransfo> cocone_cells;     // per index generator, invertible on marked
  MarkedClass marking;
};

SigmaColimResult sigma_bicolimit(const DiagramOfCategories& F, const MarkedClass& S,
                                 const Caps& caps = {});

// reindex a diagram along the projection of a category of elements:
// fibers pull back, lifts carry the original transitions, fiberwise
// generators carry identities
DiagramOfCategories reindex_along_elements(const DiagramOfCategories& F,
                                           const ElementsResult& E);

// deweighting: reindex along the category of elements, then take the
// conical sigma-bicolimit marked at the cartesian generators
struct WeightedColimResult {
  ElementsResult elements;
  DiagramOfCategories reindexed;
  SigmaColimResult sigma;
};

WeightedColimResult weighted_bicolimit(const DiagramOfCategories& F,
                                       const WeightPresentation& W,
                                       const Caps& caps = {});

// two-out-of-three for invertible words: given inverses for two of
// {u, v, u.v}, construct and oracle-verify an inverse for the third
std::optional<Word> derive_inverse_two_of_three(
    const CatPtr& cat, const Word& u, const Word& v,
    const std::optional<Word>& u_inv, const std::optional<Word>& v_inv,
    const std::optional<Word>& uv_inv, const Caps& caps = {});

}  // namespace catcolim
