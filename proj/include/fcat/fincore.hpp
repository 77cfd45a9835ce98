#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fcat/error.hpp"

namespace fcat {

using Id = std::string;

/// Index-level tables of a finite category. Objects and arrows are numbered
/// in declaration order; `compose[g * num_arrows + f]` is g∘f, or -1 when
/// tgt(f) != src(g).
struct CatTables {
  std::vector<Id> objects;
  std::vector<Id> arrows;
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<int> identity;
  std::vector<int> compose;

  bool operator==(const CatTables&) const = default;
};

/// Name-level description of a category, as written by a user.
struct RawCategory {
  struct Arrow {
    Id name, src, tgt;
  };
  struct Composite {
    Id g, f, result;  // g∘f = result
  };
  std::vector<Id> objects;
  std::vector<Arrow> arrows;
  std::vector<std::pair<Id, Id>> identities;  // object -> arrow
  std::vector<Composite> compose;
};

class FinCat;
using Cat = std::shared_ptr<const FinCat>;

/// A validated finite category. Immutable; shared through `Cat`.
class FinCat {
 public:
  /// Validates all three category laws; throws Error on the first violation.
  static Cat make(CatTables tables);
  /// Skips law checking. For categories built by construction (products,
  /// commas, opposites) whose laws follow from their inputs.
  static Cat trusted(CatTables tables);

  int num_objects() const { return static_cast<int>(t_.objects.size()); }
  int num_arrows() const { return static_cast<int>(t_.arrows.size()); }
  const Id& object_name(int x) const { return t_.objects[x]; }
  const Id& arrow_name(int f) const { return t_.arrows[f]; }
  int src(int f) const { return t_.src[f]; }
  int tgt(int f) const { return t_.tgt[f]; }
  int identity(int x) const { return t_.identity[x]; }
  int compose(int g, int f) const { return t_.compose[g * num_arrows() + f]; }
  bool is_identity(int f) const { return t_.identity[t_.src[f]] == f; }
  const std::vector<int>& hom(int x, int y) const { return hom_[x * num_objects() + y]; }

  std::optional<int> find_object(const Id& name) const;
  std::optional<int> find_arrow(const Id& name) const;
  int object(const Id& name) const;  // throws UnknownObject
  int arrow(const Id& name) const;   // throws UnknownArrow

  const CatTables& tables() const { return t_; }
  bool operator==(const FinCat& other) const { return t_ == other.t_; }

 private:
  explicit FinCat(CatTables t);

  CatTables t_;
  std::vector<std::vector<int>> hom_;
  std::unordered_map<Id, int> object_index_;
  std::unordered_map<Id, int> arrow_index_;
};

bool same_category(const Cat& a, const Cat& b);

/// First violated law of the tables, if any.
Verdict check_category_laws(const CatTables& t);

/// Compiles name-level data to a FinCat. Errors: UnknownObject, UnknownArrow,
/// DuplicateName, NonComposablePair, TableIncomplete, IdentityLawBroken,
/// AssociativityBroken.
Cat validate_cat(const RawCategory& raw);
RawCategory to_raw(const FinCat& c);
/// Adds an identity "id_x" for every object without one, and every composite
/// with an identity, then validates.
Cat validate_with_identities(RawCategory raw);

Cat op_cat(const Cat& c);
Cat product_cat(const Cat& a, const Cat& b);
Cat discrete_cat(const std::vector<Id>& objects);

/// Thin category from a relation; reflexive-transitive closure is added.
/// Arrows are named "a<=b" and identities "id_a". Throws NotAPoset when the
/// closure identifies two distinct objects.
Cat poset_cat(const std::vector<Id>& objects, const std::vector<std::pair<Id, Id>>& less);

bool is_poset(const FinCat& c);
bool is_thin(const FinCat& c);

// ---------------------------------------------------------------- functors

struct FinFunctor {
  Cat dom;
  Cat cod;
  std::vector<int> obj;
  std::vector<int> arr;

  int operator()(int x) const { return obj[x]; }
  bool operator==(const FinFunctor& o) const {
    return same_category(dom, o.dom) && same_category(cod, o.cod) && obj == o.obj && arr == o.arr;
  }
};

Verdict check_functor(const FinFunctor& f);
FinFunctor make_functor(Cat dom, Cat cod, std::vector<int> obj, std::vector<int> arr);
/// Object map only; the codomain must be thin so arrows are forced.
FinFunctor thin_functor(Cat dom, Cat cod, std::vector<int> obj);
FinFunctor identity_functor(const Cat& c);
FinFunctor constant_functor(const Cat& dom, const Cat& cod, int object);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
FinFunctor op_functor(const FinFunctor& f, const Cat& op_dom, const Cat& op_cod);
FinFunctor op_functor(const FinFunctor& f);
FinFunctor projection_first(const Cat& a, const Cat& b, const Cat& product);
FinFunctor projection_second(const Cat& a, const Cat& b, const Cat& product);

/// All functors dom -> cod, in lexicographic order of (object map, arrow map).
std::vector<FinFunctor> all_functors(const Cat& dom, const Cat& cod);

/// Backtracking isomorphism search with degree-sequence pruning.
std::optional<FinFunctor> find_isomorphism(const Cat& a, const Cat& b);

// -------------------------------------------------- natural transformations

struct CatNat {
  FinFunctor dom;
  FinFunctor cod;
  std::vector<int> comp;  // arrow of cod category per object of dom category
};

Verdict check_nat(const CatNat& a);
CatNat identity_nat(const FinFunctor& f);
CatNat vertical(const CatNat& beta, const CatNat& alpha);
CatNat whisker_left(const FinFunctor& h, const CatNat& alpha);   // h∘α
CatNat whisker_right(const CatNat& alpha, const FinFunctor& k);  // α∘k
std::vector<CatNat> all_nats(const FinFunctor& f, const FinFunctor& g);

struct AdjunctionWitness {
  FinFunctor left;
  FinFunctor right;
  CatNat unit;
  CatNat counit;
};

/// Errors: ShapeMismatch (throws). Failing zig-zag: TriangleIdentityFails.
Checked<AdjunctionWitness> check_adjunction(const FinFunctor& f, const FinFunctor& g,
                                            const CatNat& unit, const CatNat& counit);

/// Thin case: unit and counit are forced, so only the functors are needed.
Checked<AdjunctionWitness> check_thin_adjunction(const FinFunctor& f, const FinFunctor& g);

/// Thin codomains go through check_thin_adjunction; otherwise the first
/// unit/counit pair from all_nats satisfying the zig-zags.
/// Violation: NotAnAdjunction(f,g) or the thin-case violations.
Checked<AdjunctionWitness> find_adjunction(const FinFunctor& f, const FinFunctor& g);

// ---------------------------------------------------------------- lattices

struct FinLattice {
  Cat carrier;
  std::vector<int> join_table;
  int bottom = 0;

  int size() const { return carrier->num_objects(); }
  bool leq(int a, int b) const { return !carrier->hom(a, b).empty(); }
  int join(int a, int b) const { return join_table[a * size() + b]; }
  int top() const;
};

/// Errors: NotAPoset, NoJoin(a,b), NoBottom.
FinLattice lattice_from_poset(const Cat& c);

}  // namespace fcat
