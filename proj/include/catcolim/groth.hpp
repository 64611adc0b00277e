#pragma once

#include "catcolim/equiv.hpp"
#include "catcolim/fpcat.hpp"

// Oplax colimits of diagrams of presented categories as Grothendieck
// constructions, categories of elements of Cat-valued weights, and the
// marked cartesian generators that downstream localization inverts.
//
// Convention: the canonical lift of an index generator d : i -> j runs
// (i, x) -> (j, F(d)x).

namespace catcolim {

struct DiagramOfCategories {
  CatPtr index;
  std::vector<CatPtr> fibers;                    // per index object
  std::vector<FunctorPresentation> transitions;  // per index generator
};

// endpoint compatibility, functoriality on index relations, and the
// identity-transition requirement over inverted index generators
Report validate_diagram(const DiagramOfCategories& F, const Caps& caps = {});
void require_valid_diagram(const DiagramOfCategories& F, const Caps& caps = {});

// composite transition along an index word; inverse letters are only
// traversable over identity transitions
FunctorPresentation functor_along_word(const DiagramOfCategories& F, const Word& w);

struct MarkedClass {
  CatPtr index;
  std::vector<int> marked;  // generator indices
};

MarkedClass make_marked(const CatPtr& index, const std::vector<std::string>& names);

struct GrothendieckResult {
  DiagramOfCategories diagram;
  CatPtr total;
  FunctorPresentation projection;                    // total -> index
  std::vector<FunctorPresentation> cocone_inclusions;  // fiber(i) -> total
  std::vector<int> cartesian_generators;             // the transition lifts
  std::vector<NatTransfo> oplax_cells;               // per index generator

  // pair bookkeeping for the generated presentation
  std::vector<std::vector<int>> obj_of;          // [i][x] -> total object
  std::vector<std::vector<int>> vertical_gen;    // [i][g] -> total generator
  std::vector<std::vector<int>> transition_gen;  // [d][x] -> total generator
  std::vector<std::pair<int, int>> obj_pair;     // total object -> (i, x)
};

GrothendieckResult oplax_colimit(const DiagramOfCategories& F, const Caps& caps = {});

// canonical cartesian lift of a base word starting at fiber object x
Word lift_word(const GrothendieckResult& G, const Word& base, int fiber_obj);

struct WeightPresentation {
  CatPtr index;
  std::vector<CatPtr> values;                 // per index object
  std::vector<FunctorPresentation> actions;   // per generator d: value(dst d) -> value(src d)
};

Report validate_weight(const WeightPresentation& W, const Caps& caps = {});
void require_valid_weight(const WeightPresentation& W, const Caps& caps = {});
FunctorPresentation action_along_word(const WeightPresentation& W, const Word& w);

struct ElementsResult {
  WeightPresentation weight;
  CatPtr elements;
  FunctorPresentation projection;        // elements -> index
  std::vector<int> cartesian_generators;
  std::vector<std::string> warnings;     // undecidable fiberwise invertibility

  std::vector<std::vector<int>> obj_of;     // [i][w] -> elements object
  std::vector<std::vector<int>> fiber_gen;  // [i][h] -> elements generator
  std::vector<std::vector<int>> lift_gen;   // [d][w' of value(dst d)] -> generator
  std::vector<std::pair<int, int>> obj_pair;
};

ElementsResult category_of_elements(const WeightPresentation& W, const Caps& caps = {});

// Cart_F intersected with the preimage of the marking: exactly the
// transition generators over marked index generators
std::vector<int> mark_cartesian(const GrothendieckResult& G, const MarkedClass& S);
std::vector<std::string> generator_names(const FpCategory& cat,
                                         const std::vector<int>& gens);

}  // namespace catcolim
