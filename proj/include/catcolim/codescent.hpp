#pragma once

#include <array>

#include "catcolim/localize.hpp"

// The two-truncated codescent shape over presented categories: building the
// canonical codescent diagram of a marked diagram, nerve codescent diagrams
// of a functor, coherence checkers, and bicoequalizers computed as
// presentations with freely inverted comparison generators.

namespace catcolim {

struct CodescentDiagram {
  CatPtr x0, x1, x2;
  FunctorPresentation d0, d1;  // x1 -> x0
  FunctorPresentation sec;     // x0 -> x1, common pseudosection
  FunctorPresentation p0, p1, p2;  // x2 -> x1
  NatTransfo n0;    // sec;d0 => id_x0
  NatTransfo n1;    // sec;d1 => id_x0
  NatTransfo th01;  // p0;d0 => p1;d0
  NatTransfo th02;  // p0;d1 => p2;d0
  NatTransfo th12;  // p1;d1 => p2;d1
};

using CodescentPtr = std::shared_ptr<const CodescentDiagram>;

// Finite category of marked arrows: objects are the arrows in the
// composition closure of the marking (identities included), generators are
// the commuting squares between them with arbitrary legs, presented by the
// full composition table.
struct SquareCategory {
  CatPtr base;
  CatPtr sq;
  std::vector<Word> arrows;  // sq object o denotes base arrow arrows[o]
  std::vector<std::pair<Word, Word>> legs;  // per sq generator: (leg0, leg1)

  int object_of_identity(int base_obj) const;
  // the sq arrow with the given endpoints and legs, as a word (identity or
  // one generator); throws error{undecided} when no such square was built
  Word arrow(int src_obj, int dst_obj, const Word& l0, const Word& l1) const;

  std::vector<int> id_object_;  // per base object
  std::unordered_map<std::string, int> square_lookup_;
};

SquareCategory build_square_category(const CatPtr& base, const MarkedClass& S,
                                     const Caps& caps = {});

// commuting triangles with all edges in the marked closure; a triangle is
// (first, second, composite) as square-category objects
struct TriangleCategory {
  CatPtr base;
  CatPtr tri;
  struct Triangle {
    int first, second, composite;  // square-category object indices
  };
  std::vector<Triangle> triangles;
  std::vector<std::array<Word, 3>> legs;  // per tri generator: (alpha, beta, gamma)
};

TriangleCategory build_triangle_category(const SquareCategory& sq,
                                         const Caps& caps = {});

struct MarkedCodescentResult {
  CodescentPtr X;
  SquareCategory squares;
  TriangleCategory triangles;
  GrothendieckResult g0, g1, g2;  // the three oplax colimits
};

MarkedCodescentResult build_marked_codescent(const DiagramOfCategories& F,
                                             const MarkedClass& S,
                                             const Caps& caps = {});

// nerve of a functor between finite categories via iterated iso-comma
struct NerveResult {
  CodescentPtr X;
  FunctorPresentation f;
};

NerveResult nerve_codescent(const FunctorPresentation& f, const Caps& caps = {});

// functor validity, cell endpoint agreement, naturality and invertibility
Report check_codescent(const CodescentDiagram& X, const Caps& caps = {});

struct PseudoCoeqData {
  CodescentPtr X;
  CatPtr C;
  FunctorPresentation q;  // x0 -> C
  NatTransfo xi;          // d0;q => d1;q, invertible
};

// the insertion square plus the lower and higher coherence conditions,
// object by object
Report check_pseudocoequalizing(const PseudoCoeqData& P, const Caps& caps = {});

struct BicoeqResult {
  PseudoCoeqData data;
  std::vector<int> xi_gens;  // generator of data.C per x1 object
};

BicoeqResult bicoequalizer_of_codescent(const CodescentPtr& X, const Caps& caps = {});

// factorization of other pseudocoequalizing data through the bicoequalizer:
// send each comparison generator to the given insertion component, then
// validate. Uniqueness is not searched.
struct ComparisonResult {
  FunctorPresentation functor;  // bicoeq.C -> P.C
  Report report;
};

ComparisonResult compare_pseudocoeq(const BicoeqResult& B, const PseudoCoeqData& P,
                                    const Caps& caps = {});

// the bicoequalizer weight: point, walking isomorphism, walking triangle of
// isomorphisms, with the six structure functors of the shape
struct WeightJ {
  CatPtr j0, j1, j2;
  FunctorPresentation jd0, jd1;      // j0 -> j1
  FunctorPresentation ji;            // j1 -> j0
  FunctorPresentation jp0, jp1, jp2; // j1 -> j2
};

const WeightJ& weight_j();

// weighted bicolimit computed through the codescent route: deweight along
// the category of elements, build the marked codescent diagram, bicoequalize
struct WeightedViaCodescent {
  ElementsResult elements;
  DiagramOfCategories reindexed;
  MarkedCodescentResult codescent;
  BicoeqResult bicoeq;
};

WeightedViaCodescent weighted_bicolimit_via_codescent(const DiagramOfCategories& F,
                                                      const WeightPresentation& W,
                                                      const Caps& caps = {});

}  // namespace catcolim
