#pragma once

#include "catcolim/codescent.hpp"

// Text front end: the workspace DSL, canonical printing, JSON import and
// export of presentations, and DOT export. Words are written f.g.h in
// diagrammatic order (leftmost applied first); formal inverses carry a
// ^-1 suffix; id(a) is the identity at a. Names that are not bare
// identifiers are double-quoted.

namespace catcolim {

struct Workspace {
  std::vector<std::pair<std::string, CatPtr>> categories;
  std::vector<std::pair<std::string, DiagramOfCategories>> diagrams;
  std::vector<std::pair<std::string, WeightPresentation>> weights;
  std::vector<std::pair<std::string, MarkedClass>> markings;

  const CatPtr* find_category(const std::string& name) const;
  const DiagramOfCategories* find_diagram(const std::string& name) const;
  const WeightPresentation* find_weight(const std::string& name) const;
  const MarkedClass* find_marking(const std::string& name) const;
};

Workspace parse_workspace(const std::string& text);

std::string print_workspace(const Workspace& ws);
std::string print_category(const std::string& name, const FpCategory& cat);
std::string print_word(const FpCategory& cat, const Word& w);

std::string category_to_json(const FpCategory& cat);
CatPtr category_from_json(const std::string& text, const std::string& label);

std::string category_to_dot(const FpCategory& cat, const std::string& name,
                            const std::vector<int>& highlighted = {});

}  // namespace catcolim
