#pragma once

#include <vector>

#include "fcat/fincore.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

/// (K ↓ b) with objects (a, h: K a → b), or the coslice (b ↓ K) with objects
/// (a, h: b → K a). Object ids are "(a,h)".
struct CommaCat {
  Cat cat;
  FinFunctor projection;   // to the domain of K
  std::vector<int> arrow;  // h, per comma object
  int find(int a, int h) const;

 private:
  friend CommaCat comma(const FinFunctor&, int);
  friend CommaCat coslice(const FinFunctor&, int);
  std::vector<int> index_;  // a * |arrows of B| + h -> object, or -1
  int stride_ = 0;
};

CommaCat comma(const FinFunctor& K, int b);
CommaCat coslice(const FinFunctor& K, int b);

struct ExtensionResult {
  SetFunctor extension;
  /// Left extensions: F ⇒ extension∘K. Right extensions: extension∘K ⇒ F.
  NatFamily unit;
  std::vector<CommaCat> commas;
  std::vector<Colimit> colimits;  // left extensions, per object of the codomain
  std::vector<Limit> limits;      // right extensions
};

/// Pointwise left Kan extension of F: A → Set along K: A → B.
ExtensionResult lan_set(const FinFunctor& K, const SetFunctor& F);
/// Pointwise right Kan extension, limits over (b ↓ K).
ExtensionResult ran_set(const FinFunctor& K, const SetFunctor& F);

/// nat(E, G) ≅ nat(F, G∘K) by pasting with the unit, checked on every element.
Verdict check_lan_universal(const ExtensionResult& E, const FinFunctor& K, const SetFunctor& F,
                            const SetFunctor& G);
/// nat(G, E) ≅ nat(G∘K, F) by pasting with the counit.
Verdict check_ran_universal(const ExtensionResult& E, const FinFunctor& K, const SetFunctor& F,
                            const SetFunctor& G);

// ------------------------------------------------------------ co/ends

/// Coend of F: op(A) × A → Set. Elements "x@a" from F(a,a).
Colimit coend(const Cat& A, const SetFunctor& F);
/// End of F: op(A) × A → Set, as compatible diagonal families.
Limit end(const Cat& A, const SetFunctor& F);

/// Category of elements of a presheaf W on A, with objects "(a,s)" and the
/// projection to A.
struct ElementsCat {
  Cat cat;
  FinFunctor projection;
  std::vector<std::pair<int, int>> object;  // (a, s) per object
  int find(int a, int s) const;

  std::vector<int> offset;  // first object index per a
};
ElementsCat elements(const Cat& A, const SetFunctor& W);

struct WeightedColimit {
  ElementsCat el;
  Colimit colimit;
  int cls(int a, int s, int x) const { return colimit.cls(el.find(a, s), x); }
};

/// Colimit of D: A → Set weighted by the presheaf W, computed over el(W).
WeightedColimit weighted_colim(const Cat& A, const SetFunctor& W, const SetFunctor& D);

/// Set(colim_W D, S) ≅ nat(W, Set(D−, S)), checked elementwise.
Verdict check_weighted_adjunction(const Cat& A, const SetFunctor& W, const SetFunctor& D, const FinSet& S);

// ------------------------------------------------------------ nerves

/// hom_B(f −, −) as a profunctor A ⇸ B, i.e. b ↦ hom_B(f −, b), with the
/// unit χ_a = id_{f a} ∈ hom_B(f a, f a).
struct Nerve {
  FinFunctor f;
  Profunctor body;
  std::vector<int> chi;  // chi[a]: element of body(a, f a)
};
Nerve nerve(const FinFunctor& f);

/// Whether ⟨N, χ⟩ exhibits N as Lan_f y_A: χ is natural, and the canonical
/// comparison from the pointwise extension of each y(a0) to N(a0, −) is well
/// defined and bijective. N is a profunctor A ⇸ B.
Verdict check_exhibits_extension(const FinFunctor& f, const Profunctor& N, const std::vector<int>& chi);

/// For every probe X, g: X → A, h: X → B: the map from 2-cells f g ⇒ h to
/// 2-cells y g ⇒ N h, β ↦ N(β)·χ g, is a bijection. Returns the number of
/// (g, h) pairs checked.
Checked<int> absolute_lifting_check(const FinFunctor& f, const Profunctor& N, const std::vector<int>& chi,
                                    const std::vector<Cat>& probes);
Checked<int> absolute_lifting_check(const FinFunctor& f, const std::vector<Cat>& probes);

/// Pasting: restricting the nerve of g along f, with the pasted unit, exhibits
/// Lan_{g f} y_A.
Verdict check_pasting_extension(const FinFunctor& f, const FinFunctor& g, const Profunctor& Ng,
                                const std::vector<int>& chi_g);
Verdict check_pasting_extension(const FinFunctor& f, const FinFunctor& g);

/// Every functor between finite categories is nervous; kept as a predicate so
/// statements that assume it read as written.
bool is_nervous(const FinFunctor& f);

// ----------------------------------------------------------- lattices

/// lan_g f for f valued in a finite lattice L, computed as the join of the
/// support of lan_g(y_L f). Throws NotCocomplete when the codomain of f is not
/// a lattice. Violation when the universal property fails.
Checked<FinFunctor> formal_kan_lemma(const FinFunctor& g, const FinFunctor& f);

/// If f preserves finite joins, its right adjoint lan_f(1) with the verified
/// adjunction; otherwise JoinNotPreserved with the witness pair.
Checked<AdjunctionWitness> formal_aft(const FinFunctor& f);

}  // namespace fcat
