#include "catcolim/dsl.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace catcolim {

// ---- workspace lookups -------------------------------------------------------

const CatPtr* Workspace::find_category(const std::string& name) const {
  for (const auto& [n, c] : categories)
    if (n == name) return &c;
  return nullptr;
}
const DiagramOfCategories* Workspace::find_diagram(const std::string& name) const {
  for (const auto& [n, d] : diagrams)
    if (n == name) return &d;
  return nullptr;
}
const WeightPresentation* Workspace::find_weight(const std::string& name) const {
  for (const auto& [n, w] : weights)
    if (n == name) return &w;
  return nullptr;
}
const MarkedClass* Workspace::find_marking(const std::string& name) const {
  for (const auto& [n, m] : markings)
    if (n == name) return &m;
  return nullptr;
}

// ---- lexer -------------------------------------------------------------------

namespace {

struct Token {
  enum Kind {
    Ident,
    LBrace,
    RBrace,
    Colon,
    Semi,
    Comma,
    Eq,
    Dot,
    LParen,
    RParen,
    Arrow,
    Inv,
    End
  } kind = End;
  std::string text;
  int line = 0, col = 0;
};

bool bare_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '*';
}
bool bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' ||
         c == '\'' || c == '@';
}

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
  throw error(errc::parse_error,
              "line " + std::to_string(line) + ", col " + std::to_string(col) +
                  ": " + msg);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (c == '"') {
      std::string s;
      ++i;
      ++col;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i];
        if (d == '\\' && i + 1 < text.size()) {
          s.push_back(text[i + 1]);
          i += 2;
          col += 2;
          continue;
        }
        if (d == '"') {
          closed = true;
          ++i;
          ++col;
          break;
        }
        if (d == '\n') break;
        s.push_back(d);
        ++i;
        ++col;
      }
      if (!closed) parse_fail(tl, tc, "unterminated string");
      push(Token::Ident, s, tl, tc);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Arrow, "->", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    if (c == '^' && i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '1') {
      push(Token::Inv, "^-1", tl, tc);
      i += 3;
      col += 3;
      continue;
    }
    switch (c) {
      case '{': push(Token::LBrace, "{", tl, tc); ++i; ++col; continue;
      case '}': push(Token::RBrace, "}", tl, tc); ++i; ++col; continue;
      case ':': push(Token::Colon, ":", tl, tc); ++i; ++col; continue;
      case ';': push(Token::Semi, ";", tl, tc); ++i; ++col; continue;
      case ',': push(Token::Comma, ",", tl, tc); ++i; ++col; continue;
      case '=': push(Token::Eq, "=", tl, tc); ++i; ++col; continue;
      case '.': push(Token::Dot, ".", tl, tc); ++i; ++col; continue;
      case '(': push(Token::LParen, "(", tl, tc); ++i; ++col; continue;
      case ')': push(Token::RParen, ")", tl, tc); ++i; ++col; continue;
      default: break;
    }
    if (bare_start(c)) {
      std::string s;
      while (i < text.size() && bare_char(text[i])) {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      push(Token::Ident, s, tl, tc);
      continue;
    }
    parse_fail(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Token::End, "", line, col});
  return out;
}

// ---- parser ------------------------------------------------------------------

struct RawLetter {
  std::string name;
  bool inv = false;
};
struct RawWord {
  bool is_id = false;
  std::string id_obj;
  std::vector<RawLetter> letters;
  int line = 0, col = 0;
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  Workspace ws;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool at_ident(const char* kw) const {
    return peek().kind == Token::Ident && peek().text == kw;
  }
  Token expect(Token::Kind k, const char* what) {
    if (peek().kind != k) parse_fail(peek().line, peek().col, std::string("expected ") + what);
    return next();
  }
  std::string name_token() {
    Token t = expect(Token::Ident, "a name");
    return t.text;
  }

  [[noreturn]] void resolve_fail(int line, int col, const std::string& msg) {
    throw error(errc::resolve_error,
                "line " + std::to_string(line) + ", col " + std::to_string(col) +
                    ": " + msg);
  }

  RawWord parse_raw_word() {
    RawWord w;
    w.line = peek().line;
    w.col = peek().col;
    if (at_ident("id") && toks[pos + 1].kind == Token::LParen) {
      next();
      next();
      w.is_id = true;
      w.id_obj = name_token();
      expect(Token::RParen, ")");
      return w;
    }
    while (true) {
      RawLetter l;
      l.name = name_token();
      if (peek().kind == Token::Inv) {
        next();
        l.inv = true;
      }
      w.letters.push_back(std::move(l));
      if (peek().kind != Token::Dot) break;
      next();
    }
    return w;
  }

  Word resolve_word(const FpCategory& cat, const RawWord& rw) {
    if (rw.is_id) {
      int o = cat.object_index(rw.id_obj);
      if (o < 0) resolve_fail(rw.line, rw.col, "unknown object '" + rw.id_obj + "'");
      return identity_word(o);
    }
    Word w;
    for (const auto& l : rw.letters) {
      int g = cat.generator_index(l.name);
      if (g < 0) resolve_fail(rw.line, rw.col, "unknown arrow '" + l.name + "'");
      w.letters.push_back(Letter{g, l.inv});
    }
    w.src = cat.letter_src(w.letters.front());
    w.dst = cat.letter_dst(w.letters.back());
    try {
      validate_word(cat, w);
    } catch (const error& e) {
      throw error(errc::validation_error, "line " + std::to_string(rw.line) +
                                              ", col " + std::to_string(rw.col) +
                                              ": " + e.what());
    }
    return w;
  }

  void parse_category() {
    int line = peek().line, col = peek().col;
    std::string name = name_token();
    if (ws.find_category(name))
      resolve_fail(line, col, "duplicate category '" + name + "'");
    expect(Token::LBrace, "{");
    FpCategoryBuilder b(name);
    struct PendingRel {
      RawWord lhs, rhs;
    };
    std::vector<PendingRel> rels;
    std::vector<std::pair<std::string, std::pair<int, int>>> inverts;
    while (peek().kind != Token::RBrace) {
      Token kw = expect(Token::Ident, "a clause (objects/arrows/relations/invert)");
      expect(Token::Colon, ":");
      if (kw.text == "objects") {
        while (peek().kind == Token::Ident) b.object(name_token());
        expect(Token::Semi, ";");
      } else if (kw.text == "arrows") {
        while (true) {
          std::string gname = name_token();
          expect(Token::Colon, ":");
          std::string src = name_token();
          expect(Token::Arrow, "->");
          std::string dst = name_token();
          try {
            b.gen(gname, src, dst);
          } catch (const error& e) {
            throw error(errc::resolve_error,
                        "line " + std::to_string(kw.line) + ": " + e.what());
          }
          if (peek().kind == Token::Comma) {
            next();
            continue;
          }
          break;
        }
        expect(Token::Semi, ";");
      } else if (kw.text == "relations") {
        while (true) {
          PendingRel r;
          r.lhs = parse_raw_word();
          expect(Token::Eq, "=");
          r.rhs = parse_raw_word();
          rels.push_back(std::move(r));
          if (peek().kind == Token::Comma) {
            next();
            continue;
          }
          break;
        }
        expect(Token::Semi, ";");
      } else if (kw.text == "invert") {
        while (peek().kind == Token::Ident) {
          inverts.emplace_back(name_token(), std::make_pair(kw.line, kw.col));
        }
        expect(Token::Semi, ";");
      } else {
        parse_fail(kw.line, kw.col, "unknown clause '" + kw.text + "'");
      }
    }
    expect(Token::RBrace, "}");
    // inversions before relations so inverse letters resolve
    for (const auto& [g, lc] : inverts) {
      try {
        b.invert(g);
      } catch (const error& e) {
        resolve_fail(lc.first, lc.second, e.what());
      }
    }
    for (const auto& r : rels) {
      Word lhs = resolve_raw_on_builder(b, r.lhs);
      Word rhs = resolve_raw_on_builder(b, r.rhs);
      try {
        b.relation(lhs, rhs);
      } catch (const error& e) {
        throw error(errc::validation_error, "line " + std::to_string(r.lhs.line) +
                                                ": " + e.what());
      }
    }
    ws.categories.emplace_back(name, b.build());
  }

  Word resolve_raw_on_builder(const FpCategoryBuilder& b, const RawWord& rw) {
    try {
      if (rw.is_id) return b.word("id(" + rw.id_obj + ")");
      std::vector<std::pair<std::string, bool>> letters;
      for (const auto& l : rw.letters) letters.emplace_back(l.name, l.inv);
      return b.word(letters);
    } catch (const error& e) {
      throw error(e.code == errc::unknown_generator || e.code == errc::unknown_object
                      ? errc::resolve_error
                      : errc::validation_error,
                  "line " + std::to_string(rw.line) + ", col " +
                      std::to_string(rw.col) + ": " + e.what());
    }
  }

  // `at`/`on` blocks shared by diagrams and weights. For diagrams the map on
  // generator d goes fiber(src d) -> fiber(dst d); for weights it goes
  // value(dst d) -> value(src d).
  void parse_functor_family(const CatPtr& index, bool contravariant,
                            std::vector<CatPtr>& fibers,
                            std::vector<FunctorPresentation>& maps) {
    const FpCategory& I = *index;
    fibers.assign(I.objects.size(), nullptr);
    std::vector<bool> seen_gen(I.generators.size(), false);
    struct OnBlock {
      int gen;
      std::vector<std::pair<std::string, RawWord>> entries;
      int line, col;
    };
    std::vector<OnBlock> on_blocks;
    while (peek().kind != Token::RBrace) {
      Token kw = expect(Token::Ident, "'at' or 'on'");
      if (kw.text == "at") {
        std::string obj = name_token();
        expect(Token::Colon, ":");
        std::string catname = name_token();
        expect(Token::Semi, ";");
        int o = I.object_index(obj);
        if (o < 0) resolve_fail(kw.line, kw.col, "unknown index object '" + obj + "'");
        const CatPtr* c = ws.find_category(catname);
        if (!c) resolve_fail(kw.line, kw.col, "unknown category '" + catname + "'");
        fibers[static_cast<size_t>(o)] = *c;
      } else if (kw.text == "on") {
        std::string gname = name_token();
        expect(Token::Colon, ":");
        expect(Token::LBrace, "{");
        int d = I.generator_index(gname);
        if (d < 0) resolve_fail(kw.line, kw.col, "unknown index arrow '" + gname + "'");
        OnBlock blk;
        blk.gen = d;
        blk.line = kw.line;
        blk.col = kw.col;
        while (peek().kind != Token::RBrace) {
          std::string lhs = name_token();
          expect(Token::Arrow, "->");
          RawWord rhs = parse_raw_word();
          blk.entries.emplace_back(lhs, std::move(rhs));
          if (peek().kind == Token::Comma || peek().kind == Token::Semi) next();
        }
        expect(Token::RBrace, "}");
        expect(Token::Semi, ";");
        seen_gen[static_cast<size_t>(d)] = true;
        on_blocks.push_back(std::move(blk));
      } else {
        parse_fail(kw.line, kw.col, "expected 'at' or 'on'");
      }
    }
    for (size_t o = 0; o < fibers.size(); ++o)
      if (!fibers[o])
        throw error(errc::resolve_error,
                    "no 'at' clause for index object '" + I.objects[o] + "'");
    maps.assign(I.generators.size(), FunctorPresentation{});
    for (size_t d = 0; d < I.generators.size(); ++d) {
      if (!seen_gen[d])
        throw error(errc::resolve_error, "no 'on' clause for index arrow '" +
                                             I.generators[d].name + "'");
    }
    for (const auto& blk : on_blocks) {
      const GenDecl& gd = I.generators[static_cast<size_t>(blk.gen)];
      CatPtr src = contravariant ? fibers[static_cast<size_t>(gd.dst)]
                                 : fibers[static_cast<size_t>(gd.src)];
      CatPtr dst = contravariant ? fibers[static_cast<size_t>(gd.src)]
                                 : fibers[static_cast<size_t>(gd.dst)];
      FunctorPresentation f;
      f.source = src;
      f.target = dst;
      f.object_map.assign(src->objects.size(), -1);
      f.generator_map.assign(src->generators.size(), Word{});
      f.inverse_map.assign(src->generators.size(), std::nullopt);
      std::vector<bool> gen_set(src->generators.size(), false);
      for (const auto& [lhs, rhs] : blk.entries) {
        int o = src->object_index(lhs);
        if (o >= 0) {
          if (!rhs.is_id && rhs.letters.size() == 1 && !rhs.letters[0].inv &&
              dst->object_index(rhs.letters[0].name) >= 0) {
            f.object_map[static_cast<size_t>(o)] =
                dst->object_index(rhs.letters[0].name);
            continue;
          }
          resolve_fail(rhs.line, rhs.col, "object must map to an object name");
        }
        int g = src->generator_index(lhs);
        if (g < 0)
          resolve_fail(blk.line, blk.col,
                       "'" + lhs + "' is not an object or arrow of the source");
        f.generator_map[static_cast<size_t>(g)] = resolve_word(*dst, rhs);
        gen_set[static_cast<size_t>(g)] = true;
      }
      for (size_t o = 0; o < f.object_map.size(); ++o)
        if (f.object_map[o] < 0)
          resolve_fail(blk.line, blk.col,
                       "missing image for object '" + src->objects[o] + "'");
      for (size_t g = 0; g < gen_set.size(); ++g)
        if (!gen_set[g])
          resolve_fail(blk.line, blk.col,
                       "missing image for arrow '" + src->generators[g].name + "'");
      for (size_t g = 0; g < f.generator_map.size(); ++g) {
        const Word& img = f.generator_map[g];
        if (img.src != f.object_map[static_cast<size_t>(src->generators[g].src)] ||
            img.dst != f.object_map[static_cast<size_t>(src->generators[g].dst)])
          throw error(errc::validation_error,
                      "image of '" + src->generators[g].name +
                          "' does not respect the object map");
      }
      maps[static_cast<size_t>(blk.gen)] = std::move(f);
    }
  }

  void parse_diagram() {
    int line = peek().line, col = peek().col;
    std::string name = name_token();
    if (ws.find_diagram(name)) resolve_fail(line, col, "duplicate diagram '" + name + "'");
    if (!at_ident("over")) parse_fail(peek().line, peek().col, "expected 'over'");
    next();
    std::string iname = name_token();
    const CatPtr* index = ws.find_category(iname);
    if (!index) resolve_fail(line, col, "unknown index category '" + iname + "'");
    expect(Token::LBrace, "{");
    DiagramOfCategories F;
    F.index = *index;
    parse_functor_family(*index, false, F.fibers, F.transitions);
    expect(Token::RBrace, "}");
    ws.diagrams.emplace_back(name, std::move(F));
  }

  void parse_weight() {
    int line = peek().line, col = peek().col;
    std::string name = name_token();
    if (ws.find_weight(name)) resolve_fail(line, col, "duplicate weight '" + name + "'");
    if (!at_ident("over")) parse_fail(peek().line, peek().col, "expected 'over'");
    next();
    std::string iname = name_token();
    const CatPtr* index = ws.find_category(iname);
    if (!index) resolve_fail(line, col, "unknown index category '" + iname + "'");
    expect(Token::LBrace, "{");
    WeightPresentation W;
    W.index = *index;
    parse_functor_family(*index, true, W.values, W.actions);
    expect(Token::RBrace, "}");
    ws.weights.emplace_back(name, std::move(W));
  }

  void parse_marked() {
    int line = peek().line, col = peek().col;
    std::string name = name_token();
    if (ws.find_marking(name)) resolve_fail(line, col, "duplicate marking '" + name + "'");
    if (!at_ident("on")) parse_fail(peek().line, peek().col, "expected 'on'");
    next();
    std::string iname = name_token();
    const CatPtr* index = ws.find_category(iname);
    if (!index) resolve_fail(line, col, "unknown category '" + iname + "'");
    expect(Token::LBrace, "{");
    std::vector<std::string> names;
    while (peek().kind == Token::Ident) names.push_back(name_token());
    expect(Token::RBrace, "}");
    try {
      ws.markings.emplace_back(name, make_marked(*index, names));
    } catch (const error& e) {
      resolve_fail(line, col, e.what());
    }
  }

  void run() {
    while (peek().kind != Token::End) {
      Token kw = expect(Token::Ident, "'category', 'diagram', 'weight' or 'marked'");
      if (kw.text == "category") {
        parse_category();
      } else if (kw.text == "diagram") {
        parse_diagram();
      } else if (kw.text == "weight") {
        parse_weight();
      } else if (kw.text == "marked") {
        parse_marked();
      } else {
        parse_fail(kw.line, kw.col, "unknown declaration '" + kw.text + "'");
      }
    }
  }
};

}  // namespace

Workspace parse_workspace(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  p.run();
  return std::move(p.ws);
}

// ---- printing ------------------------------------------------------------------

namespace {

const char* kKeywords[] = {"category", "diagram", "weight", "marked", "over",
                           "on",       "at",      "objects", "arrows", "relations",
                           "invert",   "id"};

bool needs_quotes(const std::string& s) {
  if (s.empty() || !bare_start(s[0])) return true;
  for (char c : s)
    if (!bare_char(c)) return true;
  for (const char* kw : kKeywords)
    if (s == kw) return true;
  return false;
}

std::string quoted(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string print_word(const FpCategory& cat, const Word& w) {
  if (w.is_identity())
    return "id(" + quoted(cat.objects[static_cast<size_t>(w.src)]) + ")";
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ".";
    out += quoted(cat.generators[static_cast<size_t>(w.letters[i].gen)].name);
    if (w.letters[i].inv) out += "^-1";
  }
  return out;
}

std::string print_category(const std::string& name, const FpCategory& cat) {
  std::ostringstream os;
  os << "category " << quoted(name) << " {\n";
  os << "  objects:";
  for (const auto& o : cat.objects) os << " " << quoted(o);
  os << ";\n";
  if (!cat.generators.empty()) {
    os << "  arrows: ";
    for (size_t g = 0; g < cat.generators.size(); ++g) {
      if (g) os << ", ";
      os << quoted(cat.generators[g].name) << ": "
         << quoted(cat.objects[static_cast<size_t>(cat.generators[g].src)]) << " -> "
         << quoted(cat.objects[static_cast<size_t>(cat.generators[g].dst)]);
    }
    os << ";\n";
  }
  if (!cat.relations.empty()) {
    os << "  relations: ";
    for (size_t r = 0; r < cat.relations.size(); ++r) {
      if (r) os << ", ";
      os << print_word(cat, cat.relations[r].lhs) << " = "
         << print_word(cat, cat.relations[r].rhs);
    }
    os << ";\n";
  }
  bool any_inv = false;
  for (char f : cat.inverted) any_inv |= (f != 0);
  if (any_inv) {
    os << "  invert:";
    for (size_t g = 0; g < cat.generators.size(); ++g)
      if (cat.is_inverted(static_cast<int>(g)))
        os << " " << quoted(cat.generators[g].name);
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string print_functor_block(const std::string& gen_name,
                                const FunctorPresentation& f) {
  std::ostringstream os;
  os << "  on " << quoted(gen_name) << ": {";
  bool first = true;
  for (size_t o = 0; o < f.source->objects.size(); ++o) {
    os << (first ? " " : ", ") << quoted(f.source->objects[o]) << " -> "
       << quoted(f.target->objects[static_cast<size_t>(f.on_object(static_cast<int>(o)))]);
    first = false;
  }
  if (!f.source->generators.empty()) {
    os << ";";
    first = true;
    for (size_t g = 0; g < f.source->generators.size(); ++g) {
      os << (first ? " " : ", ") << quoted(f.source->generators[g].name) << " -> "
         << print_word(*f.target, f.generator_map[g]);
      first = false;
    }
  }
  os << " };\n";
  return os.str();
}

}  // namespace

std::string print_workspace(const Workspace& ws) {
  std::ostringstream os;
  for (const auto& [name, cat] : ws.categories) os << print_category(name, *cat);
  for (const auto& [name, F] : ws.diagrams) {
    std::string iname;
    for (const auto& [n, c] : ws.categories)
      if (c == F.index) iname = n;
    os << "diagram " << quoted(name) << " over " << quoted(iname) << " {\n";
    for (size_t o = 0; o < F.index->objects.size(); ++o) {
      std::string fname;
      for (const auto& [n, c] : ws.categories)
        if (c == F.fibers[o]) fname = n;
      os << "  at " << quoted(F.index->objects[o]) << ": " << quoted(fname) << ";\n";
    }
    for (size_t d = 0; d < F.index->generators.size(); ++d)
      os << print_functor_block(F.index->generators[d].name, F.transitions[d]);
    os << "}\n";
  }
  for (const auto& [name, W] : ws.weights) {
    std::string iname;
    for (const auto& [n, c] : ws.categories)
      if (c == W.index) iname = n;
    os << "weight " << quoted(name) << " over " << quoted(iname) << " {\n";
    for (size_t o = 0; o < W.index->objects.size(); ++o) {
      std::string vname;
      for (const auto& [n, c] : ws.categories)
        if (c == W.values[o]) vname = n;
      os << "  at " << quoted(W.index->objects[o]) << ": " << quoted(vname) << ";\n";
    }
    for (size_t d = 0; d < W.index->generators.size(); ++d)
      os << print_functor_block(W.index->generators[d].name, W.actions[d]);
    os << "}\n";
  }
  for (const auto& [name, M] : ws.markings) {
    std::string iname;
    for (const auto& [n, c] : ws.categories)
      if (c == M.index) iname = n;
    os << "marked " << quoted(name) << " on " << quoted(iname) << " {";
    for (int g : M.marked)
      os << " " << quoted(M.index->generators[static_cast<size_t>(g)].name);
    os << " }\n";
  }
  return os.str();
}

// ---- JSON ------------------------------------------------------------------------

std::string category_to_json(const FpCategory& cat) {
  nlohmann::json j;
  j["objects"] = cat.objects;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : cat.generators)
    j["generators"].push_back({{"name", g.name},
                               {"src", cat.objects[static_cast<size_t>(g.src)]},
                               {"dst", cat.objects[static_cast<size_t>(g.dst)]}});
  auto letters = [&](const Word& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : w.letters) {
      std::string s = cat.generators[static_cast<size_t>(l.gen)].name;
      if (l.inv) s += "^-1";
      arr.push_back(s);
    }
    return arr;
  };
  j["relations"] = nlohmann::json::array();
  for (const auto& r : cat.relations)
    j["relations"].push_back(nlohmann::json::array({letters(r.lhs), letters(r.rhs)}));
  j["inverted"] = nlohmann::json::array();
  for (size_t g = 0; g < cat.generators.size(); ++g)
    if (cat.is_inverted(static_cast<int>(g)))
      j["inverted"].push_back(cat.generators[g].name);
  return j.dump(2);
}

CatPtr category_from_json(const std::string& text, const std::string& label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw error(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  FpCategoryBuilder b(label);
  try {
    for (const auto& o : j.at("objects")) b.object(o.get<std::string>());
    for (const auto& g : j.at("generators"))
      b.gen(g.at("name").get<std::string>(), g.at("src").get<std::string>(),
            g.at("dst").get<std::string>());
    if (j.contains("inverted"))
      for (const auto& g : j.at("inverted")) b.invert(g.get<std::string>());
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        auto side = [&](const nlohmann::json& arr) {
          std::vector<std::pair<std::string, bool>> letters;
          for (const auto& s : arr) {
            std::string t = s.get<std::string>();
            bool inv = false;
            if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
              inv = true;
              t = t.substr(0, t.size() - 3);
            }
            letters.emplace_back(t, inv);
          }
          return letters;
        };
        auto ls = side(r.at(0));
        auto rs = side(r.at(1));
        if (ls.empty() && rs.empty())
          throw error(errc::validation_error,
                      "relation with two identity sides is not importable");
        Word lhs, rhs;
        if (!ls.empty() && !rs.empty()) {
          lhs = b.word(ls);
          rhs = b.word(rs);
        } else if (rs.empty()) {
          lhs = b.word(ls);
          rhs = identity_word(lhs.src);
          if (lhs.src != lhs.dst)
            throw error(errc::validation_error, "identity side must be an endoword");
        } else {
          rhs = b.word(rs);
          lhs = identity_word(rhs.src);
          if (rhs.src != rhs.dst)
            throw error(errc::validation_error, "identity side must be an endoword");
        }
        b.relation(lhs, rhs);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("bad JSON shape: ") + e.what());
  }
  return b.build();
}

// ---- DOT --------------------------------------------------------------------------

std::string category_to_dot(const FpCategory& cat, const std::string& name,
                            const std::vector<int>& highlighted) {
  std::vector<char> hi(cat.generators.size(), 0);
  for (int g : highlighted)
    if (g >= 0 && g < static_cast<int>(cat.generators.size()))
      hi[static_cast<size_t>(g)] = 1;
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph \"" << esc(name) << "\" {\n  rankdir=LR;\n";
  for (const auto& o : cat.objects)
    os << "  \"" << esc(o) << "\";\n";
  for (size_t g = 0; g < cat.generators.size(); ++g) {
    const GenDecl& gd = cat.generators[g];
    os << "  \"" << esc(cat.objects[static_cast<size_t>(gd.src)]) << "\" -> \""
       << esc(cat.objects[static_cast<size_t>(gd.dst)]) << "\" [label=\""
       << esc(gd.name) << "\"";
    if (cat.is_inverted(static_cast<int>(g))) os << ", dir=both";
    if (hi[g]) os << ", color=crimson, fontcolor=crimson";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace catcolim
