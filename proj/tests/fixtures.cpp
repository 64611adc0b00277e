#include "fixtures.hpp"

namespace fixtures {

CatPtr terminal() {
  static CatPtr c = FpCategoryBuilder("One").object("*").build();
  return c;
}

CatPtr walking_arrow() {
  static CatPtr c =
      FpCategoryBuilder("Arr").object("a").object("b").gen("d", "a", "b").build();
  return c;
}

CatPtr walking_iso() {
  static CatPtr c = FpCategoryBuilder("Iso")
                        .object("x")
                        .object("y")
                        .gen("j", "x", "y")
                        .invert("j")
                        .build();
  return c;
}

CatPtr discrete2() {
  static CatPtr c = FpCategoryBuilder("Two").object("x").object("y").build();
  return c;
}

CatPtr monoid_idem() {
  static CatPtr c = [] {
    FpCategoryBuilder b("Idem");
    b.object("m").gen("s", "m", "m");
    b.relation(b.word("s.s"), b.word("s"));
    return b.build();
  }();
  return c;
}

CatPtr free_loop() {
  static CatPtr c = FpCategoryBuilder("Loop").object("o").gen("l", "o", "o").build();
  return c;
}

CatPtr loop_group() {
  static CatPtr c = FpCategoryBuilder("LoopGrp")
                        .object("o")
                        .gen("l", "o", "o")
                        .invert("l")
                        .build();
  return c;
}

CatPtr square_index() {
  static CatPtr c = [] {
    FpCategoryBuilder b("Square");
    b.object("a").object("b").object("c").object("e");
    b.gen("f", "a", "b").gen("g", "b", "e").gen("h", "a", "c").gen("k", "c", "e");
    b.relation(b.word("f.g"), b.word("h.k"));
    return b.build();
  }();
  return c;
}

namespace {

FunctorPresentation to_terminal(const CatPtr& from) {
  FunctorPresentation f;
  f.source = from;
  f.target = terminal();
  f.object_map.assign(from->objects.size(), 0);
  for (size_t g = 0; g < from->generators.size(); ++g)
    f.generator_map.push_back(identity_word(0));
  f.inverse_map.assign(from->generators.size(), std::nullopt);
  return f;
}

FunctorPresentation point_functor(const CatPtr& into, const std::string& obj) {
  FunctorPresentation f;
  f.source = terminal();
  f.target = into;
  f.object_map = {into->object_index(obj)};
  return f;
}

}  // namespace

Fixture fx_walking_arrow() {
  Fixture fx;
  fx.name = "walking-arrow";
  fx.F.index = walking_arrow();
  fx.F.fibers = {terminal(), terminal()};
  fx.F.transitions = {identity_functor(terminal())};
  fx.S = make_marked(fx.F.index, {"d"});
  return fx;
}

Fixture fx_parallel_pair() {
  Fixture fx;
  fx.name = "parallel-pair";
  static CatPtr idx = FpCategoryBuilder("Pair")
                          .object("a")
                          .object("b")
                          .gen("d0", "a", "b")
                          .gen("d1", "a", "b")
                          .build();
  fx.F.index = idx;
  fx.F.fibers = {terminal(), discrete2()};
  fx.F.transitions = {point_functor(discrete2(), "x"), point_functor(discrete2(), "y")};
  fx.S = make_marked(idx, {"d0", "d1"});
  return fx;
}

Fixture fx_span() {
  Fixture fx;
  fx.name = "span";
  static CatPtr idx = FpCategoryBuilder("Span")
                          .object("a")
                          .object("b")
                          .object("c")
                          .gen("f", "a", "b")
                          .gen("g", "a", "c")
                          .build();
  fx.F.index = idx;
  fx.F.fibers = {terminal(), terminal(), terminal()};
  fx.F.transitions = {identity_functor(terminal()), identity_functor(terminal())};
  fx.S = make_marked(idx, {"f", "g"});
  return fx;
}

Fixture fx_discrete2() {
  Fixture fx;
  fx.name = "discrete-pair";
  static CatPtr idx = FpCategoryBuilder("DiscIdx").object("u").object("v").build();
  fx.F.index = idx;
  fx.F.fibers = {terminal(), terminal()};
  fx.S.index = idx;
  return fx;
}

Fixture fx_chain3() {
  Fixture fx;
  fx.name = "chain3";
  static CatPtr idx = FpCategoryBuilder("Chain")
                          .object("a")
                          .object("b")
                          .object("c")
                          .gen("d1", "a", "b")
                          .gen("d2", "b", "c")
                          .build();
  static CatPtr arr = FpCategoryBuilder("Fib")
                          .object("p")
                          .object("q")
                          .gen("e", "p", "q")
                          .build();
  fx.F.index = idx;
  fx.F.fibers = {terminal(), arr, terminal()};
  fx.F.transitions = {point_functor(arr, "p"), to_terminal(arr)};
  fx.S = make_marked(idx, {"d1", "d2"});
  return fx;
}

Fixture fx_loop_discrete() {
  Fixture fx;
  fx.name = "loop-discrete";
  static CatPtr idx = FpCategoryBuilder("LoopIdx").object("u").object("v").build();
  fx.F.index = idx;
  fx.F.fibers = {loop_group(), terminal()};
  fx.S.index = idx;
  return fx;
}

Fixture fx_arrow_loop() {
  Fixture fx;
  fx.name = "arrow-loop";
  fx.F.index = walking_arrow();
  fx.F.fibers = {terminal(), loop_group()};
  fx.F.transitions = {point_functor(loop_group(), "o")};
  fx.S = make_marked(fx.F.index, {"d"});
  return fx;
}

std::vector<Fixture> pipeline_fixtures() {
  return {fx_walking_arrow(), fx_parallel_pair(), fx_span(), fx_discrete2(),
          fx_chain3()};
}

WeightPresentation terminal_weight(const CatPtr& index) {
  WeightPresentation W;
  W.index = index;
  W.values.assign(index->objects.size(), terminal());
  for (size_t d = 0; d < index->generators.size(); ++d)
    W.actions.push_back(identity_functor(terminal()));
  return W;
}

WeightPresentation constant_weight(const CatPtr& value) {
  WeightPresentation W;
  W.index = terminal();
  W.values = {value};
  return W;
}

DiagramOfCategories constant_diagram(const CatPtr& fiber) {
  DiagramOfCategories F;
  F.index = terminal();
  F.fibers = {fiber};
  return F;
}

Word w(const CatPtr& cat, const std::string& dotted) {
  return parse_word_name(*cat, dotted);
}

}  // namespace fixtures
