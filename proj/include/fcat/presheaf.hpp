#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcat/kan.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

/// Representable hom_A(−, a), a presheaf on A (shape op_cat(A)).
SetFunctor yoneda(const Cat& A, int a);
SetFunctor yoneda(const Cat& A, const Id& a);  // throws UnknownObject
/// Corepresentable hom_A(a, −), shape A.
SetFunctor corepresentable(const Cat& A, int a);

/// Position of each arrow inside its hom list, so hom(src f, tgt f)[pos[f]] == f.
std::vector<int> hom_positions(const FinCat& C);

/// All natural families F ⇒ G, enumerated by backtracking over elements with
/// naturality checked against already assigned components. Throws
/// ShapeMismatch.
std::vector<NatFamily> nat_hom(const SetFunctor& F, const SetFunctor& G);

/// The family y(a) ⇒ F determined by s ∈ F(a).
NatFamily yoneda_family(const Cat& A, int a, const SetFunctor& F, int s);
/// y(a) ⇒ y(b), postcomposition with g: a → b.
NatFamily yoneda_on_arrow(const Cat& A, int g);

/// G∘op(f) for a presheaf G on the codomain of f.
SetFunctor restrict(const FinFunctor& f, const SetFunctor& G);
/// Left extension of a presheaf F on A along f: A → B.
SetFunctor extend(const FinFunctor& f, const SetFunctor& F);
/// extend with its unit F ⇒ restrict(f, extend(f, F)).
ExtensionResult extend_with_unit(const FinFunctor& f, const SetFunctor& F);

struct AdjunctionBijection {
  std::vector<NatFamily> left;   // nat(extend f F, G)
  std::vector<NatFamily> right;  // nat(F, restrict f G)
  std::vector<int> forward;      // left index -> right index
};

/// nat(extend f F, G) ≅ nat(F, restrict f G) through the unit and its mate,
/// verified elementwise in both directions. Violation: BijectionFails.
Checked<AdjunctionBijection> check_ext_restrict_adjunction(const FinFunctor& f, const SetFunctor& F,
                                                           const SetFunctor& G);

/// Evaluation nat(y a, F) → F a, α ↦ α_a(1_a), checked bijective and inverse
/// to yoneda_family elementwise. Returns |F a|.
/// Violations: EvaluationNotBijective(a), EvaluationMismatch(a,s).
Checked<int> check_yoneda_lemma(const Cat& A, int a, const SetFunctor& F);

/// Canonical map colim_{el F} y → F, checked bijective at every object.
/// Returns its components. Violation: NotIso(object).
Checked<NatFamily> density_check(const Cat& A, const SetFunctor& F);

/// A natural family with every component bijective, if one exists.
std::optional<NatFamily> find_iso(const SetFunctor& F, const SetFunctor& G);

/// Position of `a` in a hom enumerated by nat_hom (sorted), or -1.
int index_of(const std::vector<NatFamily>& hom, const NatFamily& a);

/// Finite full subcategory of P A on a list of presheaves. Arrows are all
/// natural families, named "P>Q#k".
struct PresheafWorld {
  Cat base;
  std::vector<SetFunctor> objects;
  std::vector<NatFamily> arrows;  // by arrow index of `cat`
  Cat cat;

  int object_of_representable(int a) const { return representable[a]; }
  /// Arrow of `cat` with the given components between objects p and q.
  int arrow_of(int p, int q, const NatFamily& a) const;
  /// a ↦ y(a), requires every representable to be present.
  FinFunctor yoneda_functor() const;

  std::vector<int> representable;  // object index of y(a), or -1
};

/// Representables first (when requested, named "y(a)"), then the given
/// presheaves in order. No deduplication.
PresheafWorld make_world(const Cat& A, const std::vector<std::pair<Id, SetFunctor>>& presheaves,
                         bool with_representables = true);

}  // namespace fcat
