#include "fcat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <type_traits>

namespace fcat::dsl {

std::string Diagnostic::str() const {
  std::ostringstream out;
  if (!file.empty()) out << file << ":";
  if (span.line > 0) out << span.line << ":" << span.col << ":";
  if (!file.empty() || span.line > 0) out << " ";
  out << kind << ": " << message;
  if (!hint.empty()) out << " (hint: " << hint << ")";
  return out.str();
}

DslError::DslError(Diagnostic d) : Error(d.kind, d.message), d_(std::move(d)) {}

namespace {

[[noreturn]] void fail(std::string kind, std::string message, SourceSpan at, std::string hint) {
  throw DslError(Diagnostic{std::move(kind), std::move(message), at, std::move(hint), {}});
}

// ---------------------------------------------------------------- lexer

enum class Tok { name, punct, end };

struct Token {
  Tok kind;
  std::string text;
  bool quoted = false;
  SourceSpan span;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' || c == '\''; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const SourceSpan at{line, col};
    if (c == '"') {
      std::string text;
      advance(1);
      while (true) {
        if (i >= s.size() || s[i] == '\n') fail("SyntaxError", "unterminated string", at, "close the string with \"");
        if (s[i] == '"') break;
        if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == '"' || s[i + 1] == '\\')) advance(1);
        text += s[i];
        advance(1);
      }
      advance(1);
      out.push_back({Tok::name, std::move(text), true, at});
      continue;
    }
    if (name_char(c)) {
      std::string text;
      while (i < s.size()) {
        if (name_char(s[i])) {
          text += s[i];
          advance(1);
        } else if (s[i] == '-' && i + 1 < s.size() && name_char(s[i + 1])) {
          text += '-';
          advance(1);
        } else {
          break;
        }
      }
      out.push_back({Tok::name, std::move(text), false, at});
      continue;
    }
    if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '|')) {
      out.push_back({Tok::punct, std::string(s.substr(i, 2)), false, at});
      advance(2);
      continue;
    }
    if (std::string_view("{}();,:=.<").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), false, at});
      advance(1);
      continue;
    }
    fail("SyntaxError", std::string("unexpected character '") + c + "'", at,
         "names use letters, digits, _ * ' and inner -; quote anything else");
  }
  out.push_back({Tok::end, "", false, {line, col}});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  DslDocument document() {
    DslDocument doc;
    while (peek().kind != Tok::end) doc.decls.push_back(decl());
    return doc;
  }

 private:
  const Token& peek(int k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  const Token& next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }

  bool is_punct(const char* p, int k = 0) const { return peek(k).kind == Tok::punct && peek(k).text == p; }
  bool is_keyword(const char* w, int k = 0) const {
    return peek(k).kind == Tok::name && !peek(k).quoted && peek(k).text == w;
  }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }

  [[noreturn]] void unexpected(const std::string& wanted) const {
    const Token& t = peek();
    const std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    fail("SyntaxError", "expected " + wanted + ", found " + got, t.span, "insert " + wanted);
  }

  void expect(const char* p) {
    if (!accept(p)) unexpected(std::string("'") + p + "'");
  }
  void keyword(const char* w) {
    if (!is_keyword(w)) unexpected(std::string("'") + w + "'");
    next();
  }
  Name name(const char* what = "a name") {
    if (peek().kind != Tok::name) unexpected(what);
    const Token& t = next();
    return Name{t.text, t.span};
  }

  // Statements in a braced body, separated by ';' (optional before '}').
  template <class Fn>
  void body(Fn&& statement) {
    expect("{");
    while (!accept("}")) {
      if (accept(";")) continue;
      statement();
      if (!is_punct("}")) expect(";");
    }
  }

  std::vector<Name> name_set() {
    std::vector<Name> out;
    expect("{");
    if (accept("}")) return out;
    do out.push_back(name("an element")); while (accept(","));
    expect("}");
    return out;
  }

  MapTable map_table() {
    MapTable out;
    expect("{");
    if (accept("}")) return out;
    do {
      Name from = name("an element");
      expect("->");
      out.emplace_back(std::move(from), name("an element"));
    } while (accept(","));
    expect("}");
    return out;
  }

  Decl decl() {
    if (is_keyword("category")) return category();
    if (is_keyword("poset") || is_keyword("lattice")) return poset();
    if (is_keyword("functor")) return functor();
    if (is_keyword("presheaf") || is_keyword("copresheaf")) return presheaf();
    if (is_keyword("profunctor")) return profunctor();
    if (is_keyword("adjunction")) return adjunction();
    if (is_keyword("run") || is_keyword("suite")) return run();
    unexpected("a declaration (category, poset, lattice, functor, presheaf, copresheaf, profunctor, adjunction, run, "
               "suite)");
  }

  CategoryDecl category() {
    next();
    CategoryDecl d;
    d.name = name("a category name");
    body([&] {
      if (is_keyword("object")) {
        next();
        do d.objects.push_back(name("an object")); while (accept(","));
      } else if (is_keyword("arrow")) {
        next();
        do {
          CategoryDecl::Arrow a;
          a.name = name("an arrow");
          expect(":");
          a.src = name("an object");
          expect("->");
          a.tgt = name("an object");
          d.arrows.push_back(std::move(a));
        } while (accept(","));
      } else if (is_keyword("identity")) {
        next();
        CategoryDecl::Identity e;
        e.object = name("an object");
        expect("=");
        e.arrow = name("an arrow");
        d.identities.push_back(std::move(e));
      } else if (is_keyword("compose")) {
        next();
        CategoryDecl::Composite c;
        c.g = name("an arrow");
        expect(".");
        c.f = name("an arrow");
        expect("=");
        c.result = name("an arrow");
        d.compose.push_back(std::move(c));
      } else {
        unexpected("'object', 'arrow', 'identity' or 'compose'");
      }
    });
    return d;
  }

  PosetDecl poset() {
    PosetDecl d;
    d.lattice = peek().text == "lattice";
    next();
    d.name = name("a poset name");
    body([&] {
      std::vector<Name> chain{name("an element")};
      while (accept("<")) chain.push_back(name("an element"));
      d.chains.push_back(std::move(chain));
    });
    return d;
  }

  FunctorDecl functor() {
    next();
    FunctorDecl d;
    d.name = name("a functor name");
    expect(":");
    d.dom = name("a category");
    expect("->");
    d.cod = name("a category");
    body([&] {
      const bool arrows = is_keyword("arrow") && !is_punct("->", 1);
      if (arrows) next();
      do {
        Name from = name(arrows ? "an arrow" : "an object");
        expect("->");
        (arrows ? d.arrows : d.objects).emplace_back(std::move(from), name(arrows ? "an arrow" : "an object"));
      } while (accept(","));
    });
    return d;
  }

  PresheafDecl presheaf() {
    PresheafDecl d;
    d.covariant = peek().text == "copresheaf";
    next();
    d.name = name("a presheaf name");
    keyword("on");
    d.on = name("a category");
    body([&] {
      if (is_keyword("map") && !is_punct("=", 1)) {
        next();
        MapDecl m;
        m.arrow = name("an arrow");
        expect("=");
        m.table = map_table();
        d.maps.push_back(std::move(m));
      } else {
        SetDecl s;
        s.at = name("an object");
        expect("=");
        s.elems = name_set();
        d.sets.push_back(std::move(s));
      }
    });
    return d;
  }

  ProfunctorDecl profunctor() {
    next();
    ProfunctorDecl d;
    d.name = name("a profunctor name");
    expect(":");
    d.src = name("a category");
    expect("->");
    d.dst = name("a category");
    body([&] {
      if (accept("(")) {
        ProfunctorDecl::Cell c;
        c.a = name("an object");
        expect(",");
        c.b = name("an object");
        expect(")");
        expect("=");
        c.elems = name_set();
        d.cells.push_back(std::move(c));
      } else if (is_keyword("left") || is_keyword("right")) {
        ProfunctorDecl::Action a;
        a.left = next().text == "left";
        a.arrow = name("an arrow");
        keyword("at");
        a.at = name("an object");
        expect("=");
        a.table = map_table();
        d.actions.push_back(std::move(a));
      } else {
        unexpected("'(', 'left' or 'right'");
      }
    });
    return d;
  }

  AdjunctionDecl adjunction() {
    next();
    AdjunctionDecl d;
    d.name = name("an adjunction name");
    expect(":");
    d.left = name("a functor");
    expect("-|");
    d.right = name("a functor");
    expect(";");
    return d;
  }

  RunDecl run() {
    RunDecl d;
    if (is_keyword("suite")) d.words.push_back(Name{"suite", peek().span});
    next();
    d.words.push_back(name("a command"));
    while (peek().kind == Tok::name) d.words.push_back(name());
    expect(";");
    return d;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

const std::set<std::string>& reserved() {
  static const std::set<std::string> words{"category", "poset",  "lattice", "functor",  "presheaf", "copresheaf",
                                           "profunctor", "adjunction", "run", "suite",   "object",   "arrow",
                                           "identity", "compose", "map",     "left",     "right",    "at",
                                           "on"};
  return words;
}

bool plain(const std::string& s) {
  if (s.empty() || reserved().count(s)) return false;
  if (!name_char(s.front()) || !name_char(s.back())) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!name_char(s[i]) && !(s[i] == '-' && i + 1 < s.size() && name_char(s[i + 1]))) return false;
  return true;
}

std::string q(const Name& n) {
  if (plain(n.text)) return n.text;
  std::string out = "\"";
  for (char c : n.text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join_names(const std::vector<Name>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + q(names[i]);
  return out;
}

std::string print_table(const MapTable& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + q(t[i].first) + " -> " + q(t[i].second);
  return out + "}";
}

struct Printer {
  std::ostringstream out;

  void operator()(const CategoryDecl& d) {
    out << "category " << q(d.name) << " {\n";
    if (!d.objects.empty()) out << "  object " << join_names(d.objects) << ";\n";
    for (const auto& a : d.arrows) out << "  arrow " << q(a.name) << ": " << q(a.src) << " -> " << q(a.tgt) << ";\n";
    for (const auto& e : d.identities) out << "  identity " << q(e.object) << " = " << q(e.arrow) << ";\n";
    for (const auto& c : d.compose) out << "  compose " << q(c.g) << " . " << q(c.f) << " = " << q(c.result) << ";\n";
    out << "}\n";
  }
  void operator()(const PosetDecl& d) {
    out << (d.lattice ? "lattice " : "poset ") << q(d.name) << " {\n";
    for (const auto& chain : d.chains) {
      out << "  ";
      for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? " < " : "") << q(chain[i]);
      out << ";\n";
    }
    out << "}\n";
  }
  void operator()(const FunctorDecl& d) {
    out << "functor " << q(d.name) << ": " << q(d.dom) << " -> " << q(d.cod) << " {\n";
    for (const auto& [x, y] : d.objects) out << "  " << q(x) << " -> " << q(y) << ";\n";
    for (const auto& [u, v] : d.arrows) out << "  arrow " << q(u) << " -> " << q(v) << ";\n";
    out << "}\n";
  }
  void operator()(const PresheafDecl& d) {
    out << (d.covariant ? "copresheaf " : "presheaf ") << q(d.name) << " on " << q(d.on) << " {\n";
    for (const auto& s : d.sets) out << "  " << q(s.at) << " = {" << join_names(s.elems) << "};\n";
    for (const auto& m : d.maps) out << "  map " << q(m.arrow) << " = " << print_table(m.table) << ";\n";
    out << "}\n";
  }
  void operator()(const ProfunctorDecl& d) {
    out << "profunctor " << q(d.name) << ": " << q(d.src) << " -> " << q(d.dst) << " {\n";
    for (const auto& c : d.cells) out << "  (" << q(c.a) << ", " << q(c.b) << ") = {" << join_names(c.elems) << "};\n";
    for (const auto& a : d.actions)
      out << "  " << (a.left ? "left " : "right ") << q(a.arrow) << " at " << q(a.at) << " = " << print_table(a.table)
          << ";\n";
    out << "}\n";
  }
  void operator()(const AdjunctionDecl& d) {
    out << "adjunction " << q(d.name) << ": " << q(d.left) << " -| " << q(d.right) << ";\n";
  }
  void operator()(const RunDecl& d) {
    std::size_t i = 0;
    if (d.words.size() > 1 && d.words[0].text == "suite") {
      out << "suite";
      i = 1;
    } else {
      out << "run";
    }
    for (; i < d.words.size(); ++i) out << " " << q(d.words[i]);
    out << ";\n";
  }
};

// ---------------------------------------------------------------- elaboration

// Maps of a set-valued functor on `shape`, filling the ones forced by
// identities, composites and uniqueness. Returns the first arrow left open.
std::optional<int> complete_maps(const FinCat& shape, const std::vector<int>& sizes,
                                 std::vector<std::optional<std::vector<int>>>& maps) {
  const int m = shape.num_arrows();
  for (int x = 0; x < shape.num_objects(); ++x) {
    auto& slot = maps[shape.identity(x)];
    if (!slot) {
      std::vector<int> id(sizes[x]);
      for (int i = 0; i < sizes[x]; ++i) id[i] = i;
      slot = id;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f) {
        const int h = shape.compose(g, f);
        if (h < 0 || maps[h] || !maps[g] || !maps[f]) continue;
        std::vector<int> t;
        for (int x : *maps[f]) t.push_back((*maps[g])[x]);
        maps[h] = std::move(t);
        changed = true;
      }
  }
  for (int h = 0; h < m; ++h) {
    if (maps[h]) continue;
    const int from = sizes[shape.src(h)], to = sizes[shape.tgt(h)];
    if (from == 0 || to == 1) {
      maps[h] = std::vector<int>(from, 0);
      continue;
    }
    return h;
  }
  return std::nullopt;
}

class Elaborator {
 public:
  explicit Elaborator(Environment& env) : env_(env) {}

  void run(const DslDocument& doc) {
    for (const auto& d : doc.decls) std::visit(*this, d);
  }

  void operator()(const CategoryDecl& d) {
    declare(d.name);
    std::map<std::string, SourceSpan> objects, arrows;
    RawCategory raw;
    for (const auto& o : d.objects) {
      if (!objects.emplace(o.text, o.span).second)
        fail("DuplicateName", "object '" + o.text + "' declared twice in " + d.name.text, o.span,
             "remove the second declaration");
      raw.objects.push_back(o.text);
    }
    auto object = [&](const Name& n) {
      if (!objects.count(n.text))
        fail("UnresolvedReference", "'" + n.text + "' is not an object of " + d.name.text, n.span,
             "declare it with 'object " + n.text + ";'");
    };
    auto arrow = [&](const Name& n) {
      if (!arrows.count(n.text))
        fail("UnresolvedReference", "'" + n.text + "' is not an arrow of " + d.name.text, n.span,
             "declare it with 'arrow " + n.text + ": <src> -> <tgt>;'");
    };
    std::map<std::string, std::pair<std::string, std::string>> ends;
    for (const auto& a : d.arrows) {
      if (!arrows.emplace(a.name.text, a.name.span).second)
        fail("DuplicateName", "arrow '" + a.name.text + "' declared twice in " + d.name.text, a.name.span,
             "rename one of the arrows");
      object(a.src);
      object(a.tgt);
      raw.arrows.push_back({a.name.text, a.src.text, a.tgt.text});
      ends[a.name.text] = {a.src.text, a.tgt.text};
    }
    std::map<std::string, std::string> identity;
    for (const auto& e : d.identities) {
      object(e.object);
      arrow(e.arrow);
      if (!identity.emplace(e.object.text, e.arrow.text).second)
        fail("DuplicateName", "second identity for '" + e.object.text + "'", e.object.span,
             "keep one identity per object");
      raw.identities.emplace_back(e.object.text, e.arrow.text);
    }
    for (const auto& o : d.objects)
      if (!identity.count(o.text)) {
        const std::string id = "id_" + o.text;
        if (arrows.count(id))
          fail("DuplicateName", "arrow '" + id + "' clashes with the implicit identity of " + o.text, arrows[id],
               "declare 'identity " + o.text + " = " + id + ";'");
        identity[o.text] = id;
        ends[id] = {o.text, o.text};
        arrows.emplace(id, o.span);
      }
    std::set<std::pair<std::string, std::string>> given;
    for (const auto& c : d.compose) {
      arrow(c.g);
      arrow(c.f);
      arrow(c.result);
      given.emplace(c.g.text, c.f.text);
      raw.compose.push_back({c.g.text, c.f.text, c.result.text});
    }
    std::set<std::string> ids;
    for (const auto& [o, a] : identity) ids.insert(a);
    for (const auto& g : d.arrows)
      for (const auto& f : d.arrows) {
        if (ids.count(g.name.text) || ids.count(f.name.text)) continue;
        if (ends[f.name.text].second != ends[g.name.text].first) continue;
        if (!given.count({g.name.text, f.name.text}))
          fail("TableIncomplete", "no composite for " + g.name.text + " . " + f.name.text, d.name.span,
               "add 'compose " + g.name.text + " . " + f.name.text + " = <arrow>;'");
      }
    env_.categories[d.name.text] = guarded(d.name, [&] { return validate_with_identities(raw); });
    env_.order.emplace_back("category", d.name.text);
  }

  void operator()(const PosetDecl& d) {
    declare(d.name);
    std::vector<Id> objects;
    std::set<std::string> seen;
    std::vector<std::pair<Id, Id>> less;
    for (const auto& chain : d.chains) {
      for (const auto& x : chain)
        if (seen.insert(x.text).second) objects.push_back(x.text);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) less.emplace_back(chain[i].text, chain[i + 1].text);
    }
    const Cat c = guarded(d.name, [&] { return poset_cat(objects, less); });
    env_.categories[d.name.text] = c;
    if (d.lattice) env_.lattices.emplace(d.name.text, guarded(d.name, [&] { return lattice_from_poset(c); }));
    env_.order.emplace_back(d.lattice ? "lattice" : "poset", d.name.text);
  }

  void operator()(const FunctorDecl& d) {
    declare(d.name);
    const Cat A = category(d.dom), B = category(d.cod);
    FinFunctor F{A, B, std::vector<int>(A->num_objects(), -1), std::vector<int>(A->num_arrows(), -1)};
    for (const auto& [x, y] : d.objects) {
      const int a = object_of(*A, x, d.dom.text), b = object_of(*B, y, d.cod.text);
      if (F.obj[a] >= 0) fail("DuplicateName", "object '" + x.text + "' mapped twice", x.span, "keep one entry");
      F.obj[a] = b;
    }
    for (int a = 0; a < A->num_objects(); ++a)
      if (F.obj[a] < 0)
        fail("TableIncomplete", "object '" + A->object_name(a) + "' of " + d.dom.text + " is not mapped", d.name.span,
             "add '" + A->object_name(a) + " -> <object>;'");
    for (const auto& [u, v] : d.arrows) {
      const int f = arrow_of(*A, u, d.dom.text), g = arrow_of(*B, v, d.cod.text);
      if (F.arr[f] >= 0) fail("DuplicateName", "arrow '" + u.text + "' mapped twice", u.span, "keep one entry");
      F.arr[f] = g;
    }
    for (int x = 0; x < A->num_objects(); ++x)
      if (F.arr[A->identity(x)] < 0) F.arr[A->identity(x)] = B->identity(F.obj[x]);
    for (bool changed = true; changed;) {
      changed = false;
      for (int g = 0; g < A->num_arrows(); ++g)
        for (int f = 0; f < A->num_arrows(); ++f) {
          const int h = A->compose(g, f);
          if (h < 0 || F.arr[h] >= 0 || F.arr[g] < 0 || F.arr[f] < 0) continue;
          const int k = B->compose(F.arr[g], F.arr[f]);
          if (k < 0) continue;
          F.arr[h] = k;
          changed = true;
        }
    }
    for (int f = 0; f < A->num_arrows(); ++f) {
      if (F.arr[f] >= 0) continue;
      const auto& h = B->hom(F.obj[A->src(f)], F.obj[A->tgt(f)]);
      if (h.size() == 1) {
        F.arr[f] = h[0];
        continue;
      }
      fail("TableIncomplete", "arrow '" + A->arrow_name(f) + "' is not mapped and not forced", d.name.span,
           "add 'arrow " + A->arrow_name(f) + " -> <arrow>;'");
    }
    if (auto v = check_functor(F)) fail(v->kind, v->witness, d.name.span, "fix the functor table");
    env_.functors[d.name.text] = F;
    env_.order.emplace_back("functor", d.name.text);
  }

  void operator()(const PresheafDecl& d) {
    declare(d.name);
    const Cat A = category(d.on);
    const Cat shape = d.covariant ? A : op_cat(A);
    std::vector<std::optional<FinSet>> sets(A->num_objects());
    for (const auto& s : d.sets) {
      const int a = object_of(*A, s.at, d.on.text);
      if (sets[a]) fail("DuplicateName", "second set for '" + s.at.text + "'", s.at.span, "keep one entry");
      sets[a] = finset(s.elems);
    }
    std::vector<int> sizes;
    for (int a = 0; a < A->num_objects(); ++a) {
      if (!sets[a])
        fail("TableIncomplete", "no set for object '" + A->object_name(a) + "'", d.name.span,
             "add '" + A->object_name(a) + " = {...};'");
      sizes.push_back(sets[a]->size());
    }
    std::vector<std::optional<std::vector<int>>> maps(A->num_arrows());
    for (const auto& m : d.maps) {
      const int f = arrow_of(*A, m.arrow, d.on.text);
      if (maps[f]) fail("DuplicateName", "second map for '" + m.arrow.text + "'", m.arrow.span, "keep one entry");
      maps[f] = table(*sets[shape->src(f)], *sets[shape->tgt(f)], m.table, m.arrow);
    }
    SetFunctor F{shape, {}, {}};
    for (auto& s : sets) F.sets.push_back(*s);
    F.maps = finish_maps(*shape, sizes, maps, d.name);
    if (auto v = check_set_functor(F)) fail(v->kind, v->witness, d.name.span, "fix the map tables");
    env_.sets[d.name.text] = Environment::SetValue{d.on.text, d.covariant, std::move(F)};
    env_.order.emplace_back(d.covariant ? "copresheaf" : "presheaf", d.name.text);
  }

  void operator()(const ProfunctorDecl& d) {
    declare(d.name);
    const Cat A = category(d.src), B = category(d.dst);
    const int nA = A->num_objects(), nB = B->num_objects(), mA = A->num_arrows(), mB = B->num_arrows();
    std::vector<std::optional<FinSet>> cells(static_cast<std::size_t>(nA) * nB);
    for (const auto& c : d.cells) {
      const int a = object_of(*A, c.a, d.src.text), b = object_of(*B, c.b, d.dst.text);
      if (cells[a * nB + b]) fail("DuplicateName", "second set for (" + c.a.text + ", " + c.b.text + ")", c.a.span,
                                  "keep one entry");
      cells[a * nB + b] = finset(c.elems);
    }
    for (int a = 0; a < nA; ++a)
      for (int b = 0; b < nB; ++b)
        if (!cells[a * nB + b])
          fail("TableIncomplete", "no set for (" + A->object_name(a) + ", " + B->object_name(b) + ")", d.name.span,
               "add '(" + A->object_name(a) + ", " + B->object_name(b) + ") = {...};'");
    // left[b][u]: P(tgt u, b) -> P(src u, b); right[a][v]: P(a, src v) -> P(a, tgt v)
    std::vector<std::vector<std::optional<std::vector<int>>>> left(nB, std::vector<std::optional<std::vector<int>>>(mA)),
        right(nA, std::vector<std::optional<std::vector<int>>>(mB));
    for (const auto& act : d.actions) {
      if (act.left) {
        const int u = arrow_of(*A, act.arrow, d.src.text), b = object_of(*B, act.at, d.dst.text);
        auto& slot = left[b][u];
        if (slot) fail("DuplicateName", "second left action for " + act.arrow.text + " at " + act.at.text,
                       act.arrow.span, "keep one entry");
        slot = table(*cells[A->tgt(u) * nB + b], *cells[A->src(u) * nB + b], act.table, act.arrow);
      } else {
        const int v = arrow_of(*B, act.arrow, d.dst.text), a = object_of(*A, act.at, d.src.text);
        auto& slot = right[a][v];
        if (slot) fail("DuplicateName", "second right action for " + act.arrow.text + " at " + act.at.text,
                       act.arrow.span, "keep one entry");
        slot = table(*cells[a * nB + B->src(v)], *cells[a * nB + B->tgt(v)], act.table, act.arrow);
      }
    }
    const Cat opA = op_cat(A);
    std::vector<std::vector<std::vector<int>>> L(nB), R(nA);
    for (int b = 0; b < nB; ++b) {
      std::vector<int> sizes;
      for (int a = 0; a < nA; ++a) sizes.push_back(cells[a * nB + b]->size());
      L[b] = finish_maps(*opA, sizes, left[b], d.name);
    }
    for (int a = 0; a < nA; ++a) {
      std::vector<int> sizes;
      for (int b = 0; b < nB; ++b) sizes.push_back(cells[a * nB + b]->size());
      R[a] = finish_maps(*B, sizes, right[a], d.name);
    }
    Profunctor P{A, B, SetFunctor{product_cat(opA, B), {}, {}}};
    for (auto& c : cells) P.body.sets.push_back(*c);
    P.body.maps.resize(static_cast<std::size_t>(mA) * mB);
    for (int u = 0; u < mA; ++u)
      for (int v = 0; v < mB; ++v) {
        auto& out = P.body.maps[P.arrow(u, v)];
        for (int x : L[B->src(v)][u]) out.push_back(R[A->src(u)][v][x]);
      }
    if (auto v = check_profunctor(P)) fail(v->kind, v->witness, d.name.span, "make the left and right actions commute");
    env_.profunctors[d.name.text] = std::move(P);
    env_.order.emplace_back("profunctor", d.name.text);
  }

  void operator()(const AdjunctionDecl& d) {
    declare(d.name);
    const FinFunctor& f = functor(d.left);
    const FinFunctor& g = functor(d.right);
    if (!same_category(f.dom, g.cod) || !same_category(f.cod, g.dom))
      fail("ShapeMismatch", d.left.text + " and " + d.right.text + " are not opposite", d.name.span,
           "the right adjoint must go back from the codomain of the left one");
    auto r = find_adjunction(f, g);
    if (!r.ok()) fail(r.violation().kind, r.violation().witness, d.name.span, "check the two functors");
    env_.adjunctions[d.name.text] = {d.left.text, d.right.text};
    env_.order.emplace_back("adjunction", d.name.text);
  }

  void operator()(const RunDecl& d) { env_.runs.emplace_back(d, d.words.front().span); }

 private:
  void declare(const Name& n) {
    if (!env_.kind_of(n.text).empty())
      fail("DuplicateName", "'" + n.text + "' is already declared", n.span, "rename one of the declarations");
  }

  template <class Fn>
  std::invoke_result_t<Fn> guarded(const Name& at, Fn&& fn) {
    try {
      return fn();
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      fail(e.kind(), e.witness(), at.span, "fix the declaration of " + at.text);
    }
  }

  Cat category(const Name& n) {
    auto it = env_.categories.find(n.text);
    if (it == env_.categories.end()) {
      const std::string k = env_.kind_of(n.text);
      fail("UnresolvedReference",
           k.empty() ? "no category named '" + n.text + "'" : "'" + n.text + "' is a " + k + ", not a category", n.span,
           "declare the category before its first use");
    }
    return it->second;
  }

  const FinFunctor& functor(const Name& n) {
    auto it = env_.functors.find(n.text);
    if (it == env_.functors.end())
      fail("UnresolvedReference", "no functor named '" + n.text + "'", n.span,
           "declare the functor before its first use");
    return it->second;
  }

  static int object_of(const FinCat& c, const Name& n, const std::string& cat) {
    if (auto x = c.find_object(n.text)) return *x;
    fail("UnresolvedReference", "'" + n.text + "' is not an object of " + cat, n.span, "use an object of " + cat);
  }
  static int arrow_of(const FinCat& c, const Name& n, const std::string& cat) {
    if (auto f = c.find_arrow(n.text)) return *f;
    fail("UnresolvedReference", "'" + n.text + "' is not an arrow of " + cat, n.span, "use an arrow of " + cat);
  }

  static FinSet finset(const std::vector<Name>& elems) {
    FinSet s;
    std::set<std::string> seen;
    for (const auto& e : elems) {
      if (!seen.insert(e.text).second)
        fail("DuplicateName", "element '" + e.text + "' listed twice", e.span, "remove the repeated element");
      s.elems.push_back(e.text);
    }
    return s;
  }

  static std::vector<int> table(const FinSet& from, const FinSet& to, const MapTable& t, const Name& arrow) {
    std::vector<int> out(from.size(), -1);
    for (const auto& [x, y] : t) {
      const int i = from.index_of(x.text), j = to.index_of(y.text);
      if (i < 0) fail("UnresolvedReference", "'" + x.text + "' is not in the source set of " + arrow.text, x.span,
                      "use an element of the source set");
      if (j < 0) fail("UnresolvedReference", "'" + y.text + "' is not in the target set of " + arrow.text, y.span,
                      "use an element of the target set");
      if (out[i] >= 0) fail("DuplicateName", "'" + x.text + "' mapped twice", x.span, "keep one entry");
      out[i] = j;
    }
    for (int i = 0; i < from.size(); ++i)
      if (out[i] < 0)
        fail("TableIncomplete", "'" + from[i] + "' has no image under " + arrow.text, arrow.span,
             "add '" + from[i] + " -> <element>' to the table");
    return out;
  }

  static std::vector<std::vector<int>> finish_maps(const FinCat& shape, const std::vector<int>& sizes,
                                                   std::vector<std::optional<std::vector<int>>>& maps,
                                                   const Name& at) {
    if (auto open = complete_maps(shape, sizes, maps))
      fail("TableIncomplete", "no map for arrow '" + shape.arrow_name(*open) + "'", at.span,
           "add a table for " + shape.arrow_name(*open));
    std::vector<std::vector<int>> out;
    for (auto& m : maps) out.push_back(std::move(*m));
    return out;
  }

  Environment& env_;
};

}  // namespace

const std::string& decl_name(const Decl& d) {
  static const std::string none;
  return std::visit(
      [](const auto& x) -> const std::string& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, RunDecl>) return none;
        else return x.name.text;
      },
      d);
}

DslDocument parse_syntax(std::string_view source) { return Parser(lex(source)).document(); }

std::string print(const DslDocument& doc) {
  Printer p;
  for (std::size_t i = 0; i < doc.decls.size(); ++i) {
    const bool block = !std::holds_alternative<RunDecl>(doc.decls[i]) &&
                       !std::holds_alternative<AdjunctionDecl>(doc.decls[i]);
    if (i && block) p.out << "\n";
    std::visit(p, doc.decls[i]);
  }
  return p.out.str();
}

std::string Environment::kind_of(const std::string& name) const {
  for (const auto& [k, n] : order)
    if (n == name) return k;
  return "";
}

std::vector<std::string> Environment::names_of(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& [k, n] : order)
    if (k == kind) out.push_back(n);
  return out;
}

void elaborate_into(Environment& env, const DslDocument& doc) { Elaborator(env).run(doc); }

Environment elaborate(const DslDocument& doc) {
  Environment env;
  elaborate_into(env, doc);
  return env;
}

DslDocument parse(std::string_view source) {
  DslDocument doc = parse_syntax(source);
  elaborate(doc);
  return doc;
}

}  // namespace fcat::dsl
