#pragma once

#include <vector>

#include "fcat/fincore.hpp"
#include "fcat/finset.hpp"

namespace fcat {

/// Covariant finite-set-valued functor on `shape`. A presheaf on A is a
/// SetFunctor whose shape is op_cat(A).
struct SetFunctor {
  Cat shape;
  std::vector<FinSet> sets;
  std::vector<std::vector<int>> maps;  // maps[f][i]: element of sets[tgt f]

  const FinSet& at(int x) const { return sets[x]; }
  int apply(int f, int i) const { return maps[f][i]; }
  int total_size() const;
};

/// Structural equality: same shape tables, same element ids, same maps.
bool operator==(const SetFunctor& a, const SetFunctor& b);

Verdict check_set_functor(const SetFunctor& F);
SetFunctor make_set_functor(Cat shape, std::vector<FinSet> sets, std::vector<std::vector<int>> maps);
SetFunctor constant_set_functor(const Cat& shape, const FinSet& value);
SetFunctor empty_set_functor(const Cat& shape);
/// F∘K.
SetFunctor precompose(const SetFunctor& F, const FinFunctor& K);
/// Same tables read on another (table-identical) shape object.
SetFunctor reshape(const SetFunctor& F, const Cat& shape);

/// Components of a natural family. The domain and codomain functors travel
/// alongside; see check_nat_family.
struct NatFamily {
  std::vector<std::vector<int>> comp;
  bool operator==(const NatFamily&) const = default;
  auto operator<=>(const NatFamily&) const = default;
};

Verdict check_nat_family(const SetFunctor& F, const SetFunctor& G, const NatFamily& a);
NatFamily identity_family(const SetFunctor& F);
NatFamily vcompose(const NatFamily& beta, const NatFamily& alpha);  // β∘α
NatFamily whisker(const NatFamily& a, const FinFunctor& K);          // α K
bool is_iso_family(const NatFamily& a, const SetFunctor& G);
/// Canonical id: images listed per object, objects separated by '|'.
Id nat_id(const SetFunctor& cod, const NatFamily& a);

// ------------------------------------------------------------- profunctors

/// A functor B → P A, i.e. a profunctor A ⇸ B: body on op(A) × B,
/// contravariant in A and covariant in B.
struct Profunctor {
  Cat src;   // A
  Cat dst;   // B
  SetFunctor body;

  int cell(int a, int b) const { return a * dst->num_objects() + b; }
  int arrow(int u, int v) const { return u * dst->num_arrows() + v; }
  const FinSet& at(int a, int b) const { return body.sets[cell(a, b)]; }
  /// body(u, v) for u: a → a' in A and v: b → b' in B, from (a', b) to (a, b').
  int act(int u, int v, int x) const { return body.maps[arrow(u, v)][x]; }
  /// The presheaf body(−, b).
  SetFunctor column(int b) const;
  /// The functor body(a, −).
  SetFunctor row(int a) const;
  /// column(b) ⇒ column(b') for v: b → b'.
  NatFamily column_map(int v) const;
};

Verdict check_profunctor(const Profunctor& P);
/// Assembles a profunctor from its columns and column maps; fails with Error
/// if the result is not a functor.
Profunctor profunctor_from_columns(const Cat& A, const Cat& B, const std::vector<SetFunctor>& columns,
                                   const std::vector<NatFamily>& maps);

// ----------------------------------------------------- (co)limits in FinSet

struct Limit {
  FinSet apex;
  std::vector<std::vector<int>> families;  // families[e][j] element of D(j)
};

/// Compatible families of D, enumerated by backtracking over the objects of
/// the shape in order. Element ids are tuples of component ids.
Limit limit_of_diagram(const SetFunctor& D);

struct Colimit {
  Quotient quotient;                             // over the disjoint union
  std::vector<std::vector<int>> injection;       // injection[j][x]: carrier index
  std::vector<std::pair<int, int>> origin;       // carrier index -> (j, x)
  std::vector<int> class_number;                 // carrier index -> class number
  FinSet classes;                                // representative ids

  int cls(int j, int x) const { return class_number[injection[j][x]]; }
  int num_classes() const { return classes.size(); }
  /// Carrier indices of the class representatives, by class number.
  std::vector<int> representatives() const { return quotient.representatives(); }
};

/// Disjoint union of the D(j), elements tagged "x@j", quotiented by
/// x ~ D(u)(x). Representatives are the least tagged ids.
Colimit colimit_of_diagram(const SetFunctor& D);

/// Colimit of the disjoint union of `parts` (one FinSet per tag) under the
/// given identifications of (part, element) pairs.
Colimit colimit_of_parts(const std::vector<FinSet>& parts, const std::vector<Id>& tags,
                         const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& relations);

}  // namespace fcat
