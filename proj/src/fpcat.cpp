#include "catcolim/fpcat.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace catcolim {

const char* errc_name(errc c) {
  switch (c) {
    case errc::word_malformed: return "WordMalformed";
    case errc::not_parallel: return "NotParallel";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::unknown_object: return "UnknownObject";
    case errc::index_not_finite: return "IndexNotFinite";
    case errc::value_not_finite: return "ValueNotFinite";
    case errc::invalid_diagram: return "InvalidDiagram";
    case errc::invalid_weight: return "InvalidWeight";
    case errc::index_mismatch: return "IndexMismatch";
    case errc::not_finite: return "NotFinite";
    case errc::undecided: return "Undecided";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::parse_error: return "ParseError";
    case errc::resolve_error: return "ResolveError";
    case errc::validation_error: return "ValidationError";
  }
  return "Error";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "Equal";
    case Verdict::unequal: return "Unequal";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

// ---- FpCategory ---------------------------------------------------------

int FpCategory::object_index(const std::string& name) const {
  auto it = object_lookup_.find(name);
  return it == object_lookup_.end() ? -1 : it->second;
}

int FpCategory::generator_index(const std::string& name) const {
  auto it = generator_lookup_.find(name);
  return it == generator_lookup_.end() ? -1 : it->second;
}

int FpCategory::letter_src(const Letter& l) const {
  const auto& g = generators[static_cast<size_t>(l.gen)];
  return l.inv ? g.dst : g.src;
}

int FpCategory::letter_dst(const Letter& l) const {
  const auto& g = generators[static_cast<size_t>(l.gen)];
  return l.inv ? g.src : g.dst;
}

FpCategoryBuilder::FpCategoryBuilder(std::string label)
    : cat_(std::make_shared<FpCategory>()) {
  cat_->label = std::move(label);
}

static void require(bool cond, errc code, const std::string& msg) {
  if (!cond) throw error(code, msg);
}

FpCategoryBuilder& FpCategoryBuilder::object(const std::string& name) {
  require(!built_, errc::validation_error, "builder already finished");
  require(cat_->object_lookup_.count(name) == 0 &&
              cat_->generator_lookup_.count(name) == 0,
          errc::validation_error, "duplicate name '" + name + "'");
  cat_->object_lookup_[name] = static_cast<int>(cat_->objects.size());
  cat_->objects.push_back(name);
  return *this;
}

FpCategoryBuilder& FpCategoryBuilder::gen(const std::string& name,
                                          const std::string& src,
                                          const std::string& dst) {
  require(!built_, errc::validation_error, "builder already finished");
  require(cat_->object_lookup_.count(name) == 0 &&
              cat_->generator_lookup_.count(name) == 0,
          errc::validation_error, "duplicate name '" + name + "'");
  int s = cat_->object_index(src);
  int d = cat_->object_index(dst);
  require(s >= 0, errc::validation_error,
          "generator '" + name + "': unknown object '" + src + "'");
  require(d >= 0, errc::validation_error,
          "generator '" + name + "': unknown object '" + dst + "'");
  cat_->generator_lookup_[name] = static_cast<int>(cat_->generators.size());
  cat_->generators.push_back(GenDecl{name, s, d});
  cat_->inverted.push_back(0);
  return *this;
}

FpCategoryBuilder& FpCategoryBuilder::relation(const Word& lhs, const Word& rhs) {
  require(!built_, errc::validation_error, "builder already finished");
  validate_word(*cat_, lhs);
  validate_word(*cat_, rhs);
  require(lhs.src == rhs.src && lhs.dst == rhs.dst, errc::validation_error,
          "relation sides are not parallel");
  if (lhs == rhs) return *this;  // vacuous
  cat_->relations.push_back(Relation{lhs, rhs});
  return *this;
}

FpCategoryBuilder& FpCategoryBuilder::invert(const std::string& gen_name) {
  require(!built_, errc::validation_error, "builder already finished");
  int g = cat_->generator_index(gen_name);
  require(g >= 0, errc::validation_error,
          "invert: unknown generator '" + gen_name + "'");
  cat_->inverted[static_cast<size_t>(g)] = 1;
  return *this;
}

Word FpCategoryBuilder::word(
    const std::vector<std::pair<std::string, bool>>& letters) const {
  require(!letters.empty(), errc::validation_error,
          "empty word needs an explicit object, use id(obj)");
  Word w;
  for (const auto& [name, inv] : letters) {
    int g = cat_->generator_index(name);
    require(g >= 0, errc::unknown_generator, "unknown generator '" + name + "'");
    w.letters.push_back(Letter{g, inv});
  }
  w.src = cat_->letter_src(w.letters.front());
  w.dst = cat_->letter_dst(w.letters.back());
  validate_word(*cat_, w);
  return w;
}

Word FpCategoryBuilder::word(const std::string& dotted) const {
  return parse_word_name(*cat_, dotted);
}

CatPtr FpCategoryBuilder::build() {
  require(!built_, errc::validation_error, "builder already finished");
  // re-validate relations now that inversions are final (inverse letters
  // may only reference inverted generators)
  for (const auto& r : cat_->relations) {
    validate_word(*cat_, r.lhs);
    validate_word(*cat_, r.rhs);
  }
  built_ = true;
  return cat_;
}

// ---- word ops -----------------------------------------------------------

Word identity_word(int obj) {
  Word w;
  w.src = w.dst = obj;
  return w;
}

void validate_word(const FpCategory& cat, const Word& w) {
  int n_obj = static_cast<int>(cat.objects.size());
  require(w.src >= 0 && w.src < n_obj && w.dst >= 0 && w.dst < n_obj,
          errc::word_malformed, "word endpoints out of range");
  int cur = w.src;
  for (const auto& l : w.letters) {
    require(l.gen >= 0 && l.gen < static_cast<int>(cat.generators.size()),
            errc::word_malformed, "letter out of range");
    require(!l.inv || cat.is_inverted(l.gen), errc::word_malformed,
            "inverse letter on non-invertible generator '" +
                cat.generators[static_cast<size_t>(l.gen)].name + "'");
    require(cat.letter_src(l) == cur, errc::word_malformed,
            "letters do not chain in word");
    cur = cat.letter_dst(l);
  }
  require(cur == w.dst, errc::word_malformed, "word endpoint mismatch");
}

Word concat(const FpCategory& cat, const Word& u, const Word& v) {
  require(u.dst == v.src, errc::word_malformed,
          "composite endpoints do not chain");
  (void)cat;
  Word w;
  w.src = u.src;
  w.dst = v.dst;
  w.letters = u.letters;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

Word concat(const FpCategory& cat, std::initializer_list<Word> parts) {
  require(parts.size() > 0, errc::word_malformed, "empty composite");
  auto it = parts.begin();
  Word w = *it++;
  for (; it != parts.end(); ++it) w = concat(cat, w, *it);
  return w;
}

bool word_flippable(const FpCategory& cat, const Word& w) {
  for (const auto& l : w.letters)
    if (!cat.is_inverted(l.gen)) return false;
  return true;
}

Word word_inverse(const FpCategory& cat, const Word& w) {
  require(word_flippable(cat, w), errc::word_malformed,
          "word has no letterwise formal inverse");
  Word r;
  r.src = w.dst;
  r.dst = w.src;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(Letter{it->gen, !it->inv});
  return r;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size();
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (a.letters[i].key() != b.letters[i].key())
      return a.letters[i].key() < b.letters[i].key();
  }
  return false;
}

std::string word_name(const FpCategory& cat, const Word& w) {
  if (w.is_identity()) return "id(" + cat.objects[static_cast<size_t>(w.src)] + ")";
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ".";
    out += cat.generators[static_cast<size_t>(w.letters[i].gen)].name;
    if (w.letters[i].inv) out += "^-1";
  }
  return out;
}

Word parse_word_name(const FpCategory& cat, const std::string& text) {
  if (text.rfind("id(", 0) == 0 && text.back() == ')') {
    std::string obj = text.substr(3, text.size() - 4);
    int o = cat.object_index(obj);
    require(o >= 0, errc::unknown_object, "unknown object '" + obj + "'");
    return identity_word(o);
  }
  Word w;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dot = text.find('.', pos);
    std::string piece =
        dot == std::string::npos ? text.substr(pos) : text.substr(pos, dot - pos);
    bool inv = false;
    if (piece.size() > 3 && piece.substr(piece.size() - 3) == "^-1") {
      inv = true;
      piece = piece.substr(0, piece.size() - 3);
    }
    int g = cat.generator_index(piece);
    require(g >= 0, errc::unknown_generator, "unknown generator '" + piece + "'");
    w.letters.push_back(Letter{g, inv});
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  require(!w.letters.empty(), errc::word_malformed, "empty word text");
  w.src = cat.letter_src(w.letters.front());
  w.dst = cat.letter_dst(w.letters.back());
  validate_word(cat, w);
  return w;
}

// ---- engines ------------------------------------------------------------

Engine::Engine(CatPtr cat, const Caps& caps) : cat_(std::move(cat)), caps_(caps) {
  rs_ = complete(*cat_, caps_);
}

EnginePtr engine_for(const CatPtr& cat, const Caps& caps) {
  struct Slot {
    std::weak_ptr<const FpCategory> key;
    EnginePtr engine;
  };
  static std::mutex mu;
  static std::unordered_map<const FpCategory*, Slot> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cat.get());
  if (it != cache.end()) {
    auto held = it->second.key.lock();
    if (held == cat && it->second.engine->caps() == caps) return it->second.engine;
  }
  auto eng = std::make_shared<const Engine>(cat, caps);
  cache[cat.get()] = Slot{cat, eng};
  return eng;
}

// ---- functors -----------------------------------------------------------

FunctorPresentation identity_functor(const CatPtr& cat) {
  FunctorPresentation f;
  f.source = f.target = cat;
  f.object_map.resize(cat->objects.size());
  for (size_t i = 0; i < cat->objects.size(); ++i)
    f.object_map[i] = static_cast<int>(i);
  f.generator_map.reserve(cat->generators.size());
  for (size_t g = 0; g < cat->generators.size(); ++g) {
    Word w;
    w.src = cat->generators[g].src;
    w.dst = cat->generators[g].dst;
    w.letters.push_back(Letter{static_cast<int>(g), false});
    f.generator_map.push_back(std::move(w));
  }
  f.inverse_map.assign(cat->generators.size(), std::nullopt);
  return f;
}

bool is_identity_functor(const FunctorPresentation& f) {
  if (f.source != f.target) return false;
  for (size_t i = 0; i < f.object_map.size(); ++i)
    if (f.object_map[i] != static_cast<int>(i)) return false;
  for (size_t g = 0; g < f.generator_map.size(); ++g) {
    const Word& w = f.generator_map[g];
    if (w.letters.size() != 1 || w.letters[0].gen != static_cast<int>(g) ||
        w.letters[0].inv)
      return false;
  }
  return true;
}

Word inverse_image(const FunctorPresentation& f, int gen) {
  if (f.inverse_map.size() > static_cast<size_t>(gen) &&
      f.inverse_map[static_cast<size_t>(gen)])
    return *f.inverse_map[static_cast<size_t>(gen)];
  return word_inverse(*f.target, f.generator_map[static_cast<size_t>(gen)]);
}

Word apply(const FunctorPresentation& f, const Word& w) {
  Word out;
  out.src = f.on_object(w.src);
  out.dst = f.on_object(w.dst);
  for (const auto& l : w.letters) {
    const Word& img =
        l.inv ? inverse_image(f, l.gen) : f.generator_map[static_cast<size_t>(l.gen)];
    out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
  }
  return out;
}

FunctorPresentation compose(const FunctorPresentation& f,
                            const FunctorPresentation& g) {
  require(f.target == g.source, errc::validation_error,
          "functor composite endpoints do not chain");
  FunctorPresentation h;
  h.source = f.source;
  h.target = g.target;
  h.object_map.reserve(f.object_map.size());
  for (int o : f.object_map) h.object_map.push_back(g.on_object(o));
  h.generator_map.reserve(f.generator_map.size());
  for (const auto& w : f.generator_map) h.generator_map.push_back(apply(g, w));
  h.inverse_map.assign(f.generator_map.size(), std::nullopt);
  for (size_t i = 0; i < f.generator_map.size(); ++i) {
    bool has_inv = f.inverse_map.size() > i && f.inverse_map[i].has_value();
    if (has_inv) {
      h.inverse_map[i] = apply(g, *f.inverse_map[i]);
    } else if (f.source->is_inverted(static_cast<int>(i)) &&
               !word_flippable(*g.target, h.generator_map[i])) {
      // push the implicit inverse through g explicitly
      h.inverse_map[i] = apply(g, word_inverse(*f.target, f.generator_map[i]));
    }
  }
  return h;
}

NatTransfo identity_nat(const FunctorPresentation& f) {
  NatTransfo t;
  t.src_fun = f;
  t.dst_fun = f;
  t.components.reserve(f.object_map.size());
  for (int o : f.object_map) t.components.push_back(identity_word(o));
  t.inverse_components = t.components;
  return t;
}

// ---- reports ------------------------------------------------------------

bool Report::has_unknown() const {
  for (const auto& e : entries)
    if (e.verdict == Verdict::unknown) return true;
  return false;
}

void Report::add(std::string where, Verdict v, std::string detail) {
  entries.push_back(CheckEntry{std::move(where), v, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  checked += other.checked;
  for (const auto& e : other.entries)
    entries.push_back(CheckEntry{prefix + e.where, e.verdict, e.detail});
}

std::string Report::summary() const {
  std::ostringstream os;
  if (ok()) {
    os << "ok (" << checked << " checks)";
    return os.str();
  }
  os << entries.size() << " problem(s) in " << checked + static_cast<int>(entries.size())
     << " checks:";
  for (const auto& e : entries)
    os << "\n  [" << verdict_name(e.verdict) << "] " << e.where << ": " << e.detail;
  return os.str();
}

// ---- checkers -----------------------------------------------------------

Report check_functor(const FunctorPresentation& f, const Caps& caps) {
  Report rep;
  const FpCategory& src = *f.source;
  const FpCategory& dst = *f.target;
  if (f.object_map.size() != src.objects.size() ||
      f.generator_map.size() != src.generators.size()) {
    rep.add("shape", Verdict::unequal, "object/generator map sizes do not match");
    return rep;
  }
  for (int o : f.object_map) {
    if (o < 0 || o >= static_cast<int>(dst.objects.size())) {
      rep.add("objects", Verdict::unequal, "object image out of range");
      return rep;
    }
  }
  auto eng = engine_for(f.target, caps);
  for (size_t g = 0; g < src.generators.size(); ++g) {
    const GenDecl& gd = src.generators[g];
    const Word& img = f.generator_map[g];
    ++rep.checked;
    try {
      validate_word(dst, img);
    } catch (const error& e) {
      rep.add("generator " + gd.name, Verdict::unequal, e.what());
      continue;
    }
    if (img.src != f.on_object(gd.src) || img.dst != f.on_object(gd.dst)) {
      rep.add("generator " + gd.name, Verdict::unequal,
              "image endpoints do not match object map");
      continue;
    }
    if (src.is_inverted(static_cast<int>(g))) {
      ++rep.checked;
      bool explicit_inv =
          f.inverse_map.size() > g && f.inverse_map[g].has_value();
      if (!explicit_inv && word_flippable(dst, img)) {
        // letterwise inverse, nothing to prove
      } else if (!explicit_inv) {
        rep.add("generator " + gd.name, Verdict::unequal,
                "inverted generator image has no usable inverse");
      } else {
        const Word& inv = *f.inverse_map[g];
        try {
          validate_word(dst, inv);
          Word a = concat(dst, img, inv);
          Word b = concat(dst, inv, img);
          Verdict va = eng->eq_verdict(a, identity_word(img.src));
          Verdict vb = eng->eq_verdict(b, identity_word(img.dst));
          Verdict v = (va == Verdict::equal && vb == Verdict::equal)
                          ? Verdict::equal
                          : (va == Verdict::unknown || vb == Verdict::unknown)
                                ? Verdict::unknown
                                : Verdict::unequal;
          if (v != Verdict::equal)
            rep.add("generator " + gd.name, v,
                    "stored inverse image fails to invert");
        } catch (const error& e) {
          rep.add("generator " + gd.name, Verdict::unequal, e.what());
        }
      }
    }
  }
  if (!rep.ok()) return rep;  // images broken, relation check would throw
  for (size_t r = 0; r < src.relations.size(); ++r) {
    ++rep.checked;
    Word a = apply(f, src.relations[r].lhs);
    Word b = apply(f, src.relations[r].rhs);
    Verdict v = eng->eq_verdict(a, b);
    if (v != Verdict::equal) {
      rep.add("relation #" + std::to_string(r), v,
              word_name(src, src.relations[r].lhs) + " = " +
                  word_name(src, src.relations[r].rhs) + " maps to " +
                  word_name(dst, a) + " vs " + word_name(dst, b));
    }
  }
  return rep;
}

Report check_natural(const NatTransfo& t, const Caps& caps) {
  Report rep;
  const FunctorPresentation& F = t.src_fun;
  const FunctorPresentation& G = t.dst_fun;
  if (F.source != G.source || F.target != G.target) {
    rep.add("shape", Verdict::unequal, "component functors are not parallel");
    return rep;
  }
  const FpCategory& src = *F.source;
  const FpCategory& dst = *F.target;
  if (t.components.size() != src.objects.size()) {
    rep.add("shape", Verdict::unequal, "one component per source object required");
    return rep;
  }
  auto eng = engine_for(F.target, caps);
  for (size_t x = 0; x < src.objects.size(); ++x) {
    ++rep.checked;
    const Word& c = t.components[x];
    try {
      validate_word(dst, c);
    } catch (const error& e) {
      rep.add("component at " + src.objects[x], Verdict::unequal, e.what());
      continue;
    }
    if (c.src != F.on_object(static_cast<int>(x)) ||
        c.dst != G.on_object(static_cast<int>(x)))
      rep.add("component at " + src.objects[x], Verdict::unequal,
              "endpoints are not src_fun(x) -> dst_fun(x)");
  }
  if (!rep.ok()) return rep;
  for (size_t g = 0; g < src.generators.size(); ++g) {
    ++rep.checked;
    const GenDecl& gd = src.generators[g];
    Word gsrc;
    gsrc.src = gd.src;
    gsrc.dst = gd.dst;
    gsrc.letters.push_back(Letter{static_cast<int>(g), false});
    // tau_x . G(g)  =  F(g) . tau_y
    Word lhs = concat(dst, t.components[static_cast<size_t>(gd.src)], apply(G, gsrc));
    Word rhs = concat(dst, apply(F, gsrc), t.components[static_cast<size_t>(gd.dst)]);
    Verdict v = eng->eq_verdict(lhs, rhs);
    if (v != Verdict::equal)
      rep.add("naturality at " + gd.name, v,
              word_name(dst, lhs) + " vs " + word_name(dst, rhs));
  }
  if (t.inverse_components) {
    const auto& invs = *t.inverse_components;
    if (invs.size() != t.components.size()) {
      rep.add("inverses", Verdict::unequal, "inverse family has wrong size");
      return rep;
    }
    for (size_t x = 0; x < invs.size(); ++x) {
      ++rep.checked;
      try {
        validate_word(dst, invs[x]);
        Word a = concat(dst, t.components[x], invs[x]);
        Word b = concat(dst, invs[x], t.components[x]);
        Verdict va = eng->eq_verdict(a, identity_word(t.components[x].src));
        Verdict vb = eng->eq_verdict(b, identity_word(t.components[x].dst));
        Verdict v = (va == Verdict::equal && vb == Verdict::equal)
                        ? Verdict::equal
                        : (va == Verdict::unknown || vb == Verdict::unknown)
                              ? Verdict::unknown
                              : Verdict::unequal;
        if (v != Verdict::equal)
          rep.add("inverse at " + src.objects[x], v,
                  "component inverse fails to invert");
      } catch (const error& e) {
        rep.add("inverse at " + src.objects[x], Verdict::unequal, e.what());
      }
    }
  }
  return rep;
}

Verdict functors_equal(const FunctorPresentation& f,
                       const FunctorPresentation& g, const Caps& caps) {
  if (f.source != g.source || f.target != g.target) return Verdict::unequal;
  if (f.object_map != g.object_map) return Verdict::unequal;
  auto eng = engine_for(f.target, caps);
  Verdict out = Verdict::equal;
  for (size_t i = 0; i < f.generator_map.size(); ++i) {
    Verdict v = eng->eq_verdict(f.generator_map[i], g.generator_map[i]);
    if (v == Verdict::unequal) return Verdict::unequal;
    if (v == Verdict::unknown) out = Verdict::unknown;
  }
  return out;
}

}  // namespace catcolim
