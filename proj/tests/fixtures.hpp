#pragma once

#include "catcolim/codescent.hpp"

// Shared desk-scale fixtures: small categories, diagrams with markings,
// and weights used across the unit and acceptance suites.

namespace fixtures {

using namespace catcolim;

CatPtr terminal();       // one object "*"
CatPtr walking_arrow();  // a, b with d : a -> b
CatPtr walking_iso();    // x, y with invertible j
CatPtr discrete2();      // objects x, y
CatPtr monoid_idem();    // one object, s with s.s = s
CatPtr free_loop();      // one object, free loop l
CatPtr loop_group();     // one object, invertible loop l
CatPtr square_index();   // commuting square: f.g = h.k

struct Fixture {
  std::string name;
  DiagramOfCategories F;
  MarkedClass S;
};

Fixture fx_walking_arrow();
Fixture fx_parallel_pair();
Fixture fx_span();
Fixture fx_discrete2();
Fixture fx_chain3();
Fixture fx_loop_discrete();  // admits coherence perturbations
Fixture fx_arrow_loop();     // admits naturality perturbations

// the five pipeline fixtures
std::vector<Fixture> pipeline_fixtures();

WeightPresentation terminal_weight(const CatPtr& index);
// over the one-point index
WeightPresentation constant_weight(const CatPtr& value);
DiagramOfCategories constant_diagram(const CatPtr& fiber);

Word w(const CatPtr& cat, const std::string& dotted);

}  // namespace fixtures
