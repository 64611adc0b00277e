#include <map>
#include <random>
#include <set>

#include "catcolim/fpcat.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catcolim;
using fixtures::w;

namespace {

// independent oracle for the idempotent monoid: the congruence closure of
// s.s = s on words of length <= 3, by plain saturation
std::set<std::string> idem_class_of(const std::string& word) {
  std::set<std::string> cls{word};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::string> next = cls;
    for (const auto& u : cls) {
      for (size_t i = 0; i + 2 <= u.size(); ++i)
        if (u[i] == 's' && u[i + 1] == 's')
          next.insert(u.substr(0, i) + "s" + u.substr(i + 2));
      for (size_t i = 0; i + 1 <= u.size(); ++i)
        if (u[i] == 's' && u.size() < 3)
          next.insert(u.substr(0, i) + "ss" + u.substr(i + 1));
    }
    if (next.size() != cls.size()) {
      cls = std::move(next);
      grew = true;
    }
  }
  return cls;
}

Word random_word(const CatPtr& cat, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> obj_dist(0, static_cast<int>(cat->objects.size()) - 1);
  int target = len_dist(rng);
  Word word = identity_word(obj_dist(rng));
  for (int step = 0; step < target; ++step) {
    std::vector<Letter> options;
    for (size_t g = 0; g < cat->generators.size(); ++g) {
      if (cat->generators[g].src == word.dst)
        options.push_back(Letter{static_cast<int>(g), false});
      if (cat->is_inverted(static_cast<int>(g)) && cat->generators[g].dst == word.dst)
        options.push_back(Letter{static_cast<int>(g), true});
    }
    if (options.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, options.size() - 1);
    Letter l = options[pick(rng)];
    word.letters.push_back(l);
    word.dst = cat->letter_dst(l);
  }
  return word;
}

}  // namespace

TEST_CASE("normalize: identity word is already normal") {
  auto cat = fixtures::terminal();
  auto eng = engine_for(cat);
  Word id = identity_word(0);
  CHECK(eng->nf(id) == id);
}

TEST_CASE("normalize: idempotent monoid rewrites sss to s") {
  // oracle first: saturation of the relation on short words
  auto cls = idem_class_of("sss");
  CHECK(cls.count("s") == 1);
  std::string least = *std::min_element(
      cls.begin(), cls.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
  CHECK(least == "s");

  auto cat = fixtures::monoid_idem();
  auto eng = engine_for(cat);
  CHECK(eng->rs().complete);
  CHECK(eng->nf(w(cat, "s.s.s")) == w(cat, "s"));
}

TEST_CASE("normalize: free category leaves words alone") {
  auto cat = fixtures::free_loop();
  auto eng = engine_for(cat);
  Word lll = w(cat, "l.l.l");
  CHECK(eng->nf(lll) == lll);
}

TEST_CASE("normalize rejects malformed words") {
  auto cat = fixtures::walking_arrow();
  Word bad;
  bad.src = 0;
  bad.dst = 0;
  bad.letters = {Letter{0, false}, Letter{0, false}};  // d.d does not chain
  auto eng = engine_for(cat);
  CHECK_THROWS_AS((void)eng->nf(bad), error);
}

TEST_CASE("equal: syntactic equality and the idempotent monoid") {
  auto cat = fixtures::monoid_idem();
  auto eng = engine_for(cat);
  CHECK(eng->eq_verdict(w(cat, "s"), w(cat, "s")) == Verdict::equal);
  auto res = eng->eq(w(cat, "s.s.s"), w(cat, "s"));
  CHECK(res.verdict == Verdict::equal);
  CHECK(replay_chain(*cat, w(cat, "s.s.s"), res.witness) == w(cat, "s"));
}

TEST_CASE("equal: distinct arrows of a free category are unequal") {
  auto cat = FpCategoryBuilder("Free2")
                 .object("a")
                 .object("b")
                 .gen("f", "a", "b")
                 .gen("g", "a", "b")
                 .build();
  auto eng = engine_for(cat);
  CHECK(eng->rs().complete);
  CHECK(eng->eq_verdict(w(cat, "f"), w(cat, "g")) == Verdict::unequal);
}

TEST_CASE("equal throws on non-parallel words") {
  auto cat = fixtures::walking_arrow();
  auto eng = engine_for(cat);
  CHECK_THROWS_AS((void)eng->eq(identity_word(0), identity_word(1)), error);
}

TEST_CASE("complete: free presentations complete with no rules") {
  auto rs = complete(*fixtures::free_loop());
  CHECK(rs.complete);
  CHECK(rs.rules.empty());
}

TEST_CASE("complete: idempotent relation gives a single rule") {
  auto rs = complete(*fixtures::monoid_idem());
  CHECK(rs.complete);
  REQUIRE(rs.rules.size() == 1);
  CHECK(rs.rules[0].lhs.letters.size() == 2);
  CHECK(rs.rules[0].rhs.letters.size() == 1);
}

TEST_CASE("complete: a single inverted generator gives the two inverse rules") {
  auto rs = complete(*fixtures::walking_iso());
  CHECK(rs.complete);
  CHECK(rs.rules.size() == 2);
}

TEST_CASE("every rule strictly decreases the shortlex order") {
  for (const auto& cat :
       {fixtures::monoid_idem(), fixtures::walking_iso(), fixtures::loop_group(),
        fixtures::square_index()}) {
    auto rs = complete(*cat);
    for (const auto& rule : rs.rules) CHECK(shortlex_less(rule.rhs, rule.lhs));
  }
}

TEST_CASE("completion soundness: every rule replays from the axioms") {
  for (const auto& cat :
       {fixtures::monoid_idem(), fixtures::walking_iso(), fixtures::loop_group(),
        fixtures::square_index()}) {
    auto rs = complete(*cat);
    for (const auto& rule : rs.rules)
      CHECK(replay_chain(*cat, rule.lhs, rule.chain) == rule.rhs);
  }
}

TEST_CASE("inverted generators become isomorphisms") {
  auto cat = fixtures::loop_group();
  auto eng = engine_for(cat);
  CHECK(eng->eq_verdict(w(cat, "l.l^-1"), identity_word(0)) == Verdict::equal);
  CHECK(eng->eq_verdict(w(cat, "l^-1.l"), identity_word(0)) == Verdict::equal);
}

TEST_CASE("normalize is idempotent on random words") {
  std::mt19937 rng(7);
  for (const auto& cat :
       {fixtures::monoid_idem(), fixtures::walking_iso(), fixtures::loop_group(),
        fixtures::square_index()}) {
    auto eng = engine_for(cat);
    for (int i = 0; i < 200; ++i) {
      Word u = random_word(cat, rng, 8);
      Word nf = eng->nf(u);
      CHECK(eng->nf(nf) == nf);
    }
  }
}

TEST_CASE("equal is an equivalence on decided words") {
  std::mt19937 rng(11);
  auto cat = fixtures::monoid_idem();
  auto eng = engine_for(cat);
  std::vector<Word> words;
  for (int i = 0; i < 12; ++i) words.push_back(random_word(cat, rng, 5));
  for (const auto& u : words) CHECK(eng->eq_verdict(u, u) == Verdict::equal);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.src != v.src || u.dst != v.dst) continue;
      Verdict uv = eng->eq_verdict(u, v);
      CHECK(uv == eng->eq_verdict(v, u));
      for (const auto& t : words) {
        if (t.src != u.src || t.dst != u.dst) continue;
        if (uv == Verdict::equal && eng->eq_verdict(v, t) == Verdict::equal)
          CHECK(eng->eq_verdict(u, t) == Verdict::equal);
      }
    }
}

TEST_CASE("equality witnesses replay on random perturbations") {
  std::mt19937 rng(23);
  auto cat = fixtures::loop_group();
  auto eng = engine_for(cat);
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(cat, rng, 6);
    // equal variant: insert a cancelling pair somewhere
    Word v = u;
    std::uniform_int_distribution<size_t> pos_dist(0, v.letters.size());
    size_t p = pos_dist(rng);
    int at = p == 0 ? v.src : cat->letter_dst(v.letters[p - 1]);
    (void)at;
    v.letters.insert(v.letters.begin() + static_cast<long>(p),
                     {Letter{0, false}, Letter{0, true}});
    auto res = eng->eq(u, v);
    REQUIRE(res.verdict == Verdict::equal);
    CHECK(replay_chain(*cat, u, res.witness) == v);
  }
}

TEST_CASE("class search decides equality when completion is unavailable") {
  // force the search path with an empty, incomplete rule set
  RewriteSystem bare;
  bare.complete = false;

  auto idem = fixtures::monoid_idem();
  auto res = equal_words(*idem, bare, w(idem, "s.s.s"), w(idem, "s"));
  CHECK(res.verdict == Verdict::equal);
  CHECK(replay_chain(*idem, w(idem, "s.s.s"), res.witness) == w(idem, "s"));
  // the class of s under s.s = s is unbounded upward: sound answer is unknown
  CHECK(equal_words(*idem, bare, w(idem, "s"), identity_word(0)).verdict ==
        Verdict::unknown);

  // finite class: f = g imposed, h separate; closure finishes, so unequal
  auto three = [] {
    FpCategoryBuilder b("Three");
    b.object("a").object("b");
    b.gen("f", "a", "b").gen("g", "a", "b").gen("h", "a", "b");
    b.relation(b.word("f"), b.word("g"));
    return b.build();
  }();
  CHECK(equal_words(*three, bare, w(three, "f"), w(three, "g")).verdict ==
        Verdict::equal);
  CHECK(equal_words(*three, bare, w(three, "f"), w(three, "h")).verdict ==
        Verdict::unequal);
}

TEST_CASE("check_functor: identity always passes") {
  for (const auto& cat : {fixtures::walking_arrow(), fixtures::monoid_idem()})
    CHECK(check_functor(identity_functor(cat)).ok());
}

TEST_CASE("check_functor: collapsing the walking arrow onto the idempotent") {
  auto arr = fixtures::walking_arrow();
  auto idem = fixtures::monoid_idem();
  FunctorPresentation f;
  f.source = arr;
  f.target = idem;
  f.object_map = {0, 0};
  f.generator_map = {w(idem, "s")};
  CHECK(check_functor(f).ok());
}

TEST_CASE("check_functor: relation-breaking image fails") {
  auto idem = fixtures::monoid_idem();
  auto loop = fixtures::free_loop();
  FunctorPresentation f;
  f.source = idem;
  f.target = loop;
  f.object_map = {0};
  f.generator_map = {w(loop, "l")};
  Report rep = check_functor(f);
  CHECK(!rep.ok());
  CHECK(!rep.has_unknown());  // free loop words are decidably distinct
}

TEST_CASE("check_natural: identity transformation passes and is invertible") {
  auto f = identity_functor(fixtures::monoid_idem());
  NatTransfo t = identity_nat(f);
  CHECK(t.invertible());
  CHECK(check_natural(t).ok());
}

TEST_CASE("check_natural: the walking arrow as a component") {
  // two object inclusions of the terminal category into the walking arrow,
  // connected by the arrow itself; naturality is vacuous
  auto one = fixtures::terminal();
  auto arr = fixtures::walking_arrow();
  FunctorPresentation at_a, at_b;
  at_a.source = at_b.source = one;
  at_a.target = at_b.target = arr;
  at_a.object_map = {0};
  at_b.object_map = {1};
  NatTransfo t;
  t.src_fun = at_a;
  t.dst_fun = at_b;
  t.components = {w(arr, "d")};
  CHECK(check_natural(t).ok());

  NatTransfo bad = t;
  bad.components = {identity_word(0)};  // endpoints do not match
  CHECK(!check_natural(bad).ok());
}

TEST_CASE("builder rejects broken presentations") {
  CHECK_THROWS_AS(FpCategoryBuilder("X").gen("f", "a", "b"), error);
  CHECK_THROWS_AS(FpCategoryBuilder("X").object("a").object("a"), error);
  CHECK_THROWS_AS(FpCategoryBuilder("X").object("a").invert("f"), error);
  {
    FpCategoryBuilder b("X");
    b.object("a").object("b").gen("f", "a", "b").gen("g", "b", "a");
    CHECK_THROWS_AS(b.relation(b.word("f"), b.word("g")), error);
  }
}
