#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fcat/fincore.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat::dsl {

// Text format for categories, functors, presheaves and profunctors.
//
//   category N { object a, b; arrow f: a -> b; identity a = f; compose g . f = h; }
//   poset N { 0 < 1 < 2; x; }          lattice N { ... }
//   functor F: A -> B { a -> b; arrow f -> g; }
//   presheaf P on A { a = {p, q}; map f = { q -> p }; }     copresheaf ...
//   profunctor P: A -> B { (a, b) = {x}; left u at b = {...}; right v at a = {...}; }
//   adjunction N: F -| G;
//   run COMMAND ARGS...;               suite NAME ARGS...;
//
// Names are [A-Za-z0-9_*'] with inner '-', or double-quoted strings. Comments
// start with '#' or '//'. See docs/dsl.md for the full grammar.

/// Position of a token. Compares equal to every other span so that ASTs
/// compare by content only.
struct SourceSpan {
  int line = 0;
  int col = 0;
  bool operator==(const SourceSpan&) const { return true; }
};

struct Name {
  std::string text;
  SourceSpan span;
  bool operator==(const Name&) const = default;
};

using MapTable = std::vector<std::pair<Name, Name>>;

struct CategoryDecl {
  struct Arrow {
    Name name, src, tgt;
    bool operator==(const Arrow&) const = default;
  };
  struct Identity {
    Name object, arrow;
    bool operator==(const Identity&) const = default;
  };
  struct Composite {
    Name g, f, result;
    bool operator==(const Composite&) const = default;
  };
  Name name;
  std::vector<Name> objects;
  std::vector<Arrow> arrows;
  std::vector<Identity> identities;
  std::vector<Composite> compose;
  bool operator==(const CategoryDecl&) const = default;
};

struct PosetDecl {
  Name name;
  bool lattice = false;
  std::vector<std::vector<Name>> chains;  // a < b < c, or a lone element
  bool operator==(const PosetDecl&) const = default;
};

struct FunctorDecl {
  Name name, dom, cod;
  MapTable objects;
  MapTable arrows;
  bool operator==(const FunctorDecl&) const = default;
};

struct SetDecl {
  Name at;
  std::vector<Name> elems;
  bool operator==(const SetDecl&) const = default;
};

struct MapDecl {
  Name arrow;
  MapTable table;
  bool operator==(const MapDecl&) const = default;
};

struct PresheafDecl {
  Name name, on;
  bool covariant = false;  // copresheaf
  std::vector<SetDecl> sets;
  std::vector<MapDecl> maps;
  bool operator==(const PresheafDecl&) const = default;
};

struct ProfunctorDecl {
  struct Cell {
    Name a, b;
    std::vector<Name> elems;
    bool operator==(const Cell&) const = default;
  };
  struct Action {
    bool left = true;  // left u at b, else right v at a
    Name arrow, at;
    MapTable table;
    bool operator==(const Action&) const = default;
  };
  Name name, src, dst;  // src ⇸ dst
  std::vector<Cell> cells;
  std::vector<Action> actions;
  bool operator==(const ProfunctorDecl&) const = default;
};

struct AdjunctionDecl {
  Name name, left, right;
  bool operator==(const AdjunctionDecl&) const = default;
};

struct RunDecl {
  std::vector<Name> words;  // command then arguments; suites start with "suite"
  bool operator==(const RunDecl&) const = default;
};

using Decl = std::variant<CategoryDecl, PosetDecl, FunctorDecl, PresheafDecl, ProfunctorDecl, AdjunctionDecl,
                          RunDecl>;

/// Declared name; empty for run and suite lines.
const std::string& decl_name(const Decl& d);

struct DslDocument {
  std::vector<Decl> decls;
  bool operator==(const DslDocument&) const = default;
};

struct Diagnostic {
  std::string kind;  // SyntaxError, DuplicateName, UnresolvedReference, TableIncomplete, or a law violation
  std::string message;
  SourceSpan span;
  std::string hint;
  std::string file;
  std::string str() const;  // "file:line:col: kind: message (hint: ...)"
};

class DslError : public Error {
 public:
  explicit DslError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return d_; }

 private:
  Diagnostic d_;
};

/// Syntax only. Throws DslError(SyntaxError).
DslDocument parse_syntax(std::string_view source);

/// Canonical text; parse_syntax(print(d)) == d.
std::string print(const DslDocument& doc);

struct Environment {
  struct SetValue {
    std::string on;
    bool covariant = false;
    SetFunctor functor;  // shape op(on) for presheaves, on for copresheaves
  };
  struct AdjunctionValue {
    std::string left, right;
  };
  std::map<std::string, Cat> categories;
  std::map<std::string, FinLattice> lattices;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, SetValue> sets;
  std::map<std::string, Profunctor> profunctors;
  std::map<std::string, AdjunctionValue> adjunctions;
  std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in declaration order
  std::vector<std::pair<RunDecl, SourceSpan>> runs;

  std::string kind_of(const std::string& name) const;  // "" when undeclared
  std::vector<std::string> names_of(const std::string& kind) const;
};

/// Resolves names, completes forced tables and validates every item.
/// Throws DslError.
Environment elaborate(const DslDocument& doc);
/// Adds the items of `doc` to `env`; names must stay unique across documents.
void elaborate_into(Environment& env, const DslDocument& doc);

/// parse_syntax then elaborate; the document is returned once it elaborates.
DslDocument parse(std::string_view source);

}  // namespace fcat::dsl
