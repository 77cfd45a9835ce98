#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fcat/fincore.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

// Profunctors A ⇸ B are stored with body on op(A) × B (see setfunctor.hpp).
// A 2-cell P ⇒ P' is a NatFamily between the bodies.

/// hom_A as a profunctor A ⇸ A.
Profunctor hom_prof(const Cat& A);

/// Q ∘ P for P: A ⇸ B and Q: B ⇸ C. Cell (a, c) is the coend over b of
/// P(a, b) × Q(b, c), with elements "(p,q)@b" and least-id representatives.
struct ProfComposite {
  Profunctor result;
  std::vector<Colimit> cells;  // by result.cell(a, c)
  std::vector<std::vector<int>> reps;  // representatives() per cell
  std::vector<int> q_size;     // |Q(b, c)| at b * |C| + c
  int num_c = 0;

  /// Class of (p, q) taken at b, in cell (a, c).
  int cls(int a, int c, int b, int p, int q) const;
  /// (b, p, q) of the representative of class x in cell (a, c).
  std::array<int, 3> witness(int a, int c, int x) const;
  /// Every raw element (b, p, q) of cell (a, c).
  void for_each_raw(int a, int c, const std::function<void(int b, int p, int q)>& fn) const;
};

ProfComposite compose_coend_full(const Profunctor& Q, const Profunctor& P);
Profunctor compose_coend(const Profunctor& Q, const Profunctor& P);

/// A map out of a composite given on raw elements. NotWellDefined when two
/// members of one class disagree.
using RawRule = std::function<int(int a, int c, int b, int p, int q)>;
Checked<NatFamily> map_out_of(const ProfComposite& from, const RawRule& rule);

/// Natural and bijective in every cell. Violations: NotNatural, NotIso(cell).
Verdict check_prof_iso(const Profunctor& from, const Profunctor& to, const NatFamily& a);
/// Componentwise inverse of a bijective family onto `cod`.
NatFamily invert_family(const NatFamily& a, const SetFunctor& cod);

/// hom_B ∘ P ≅ P, (p, h) ↦ P(1, h) p.
Checked<NatFamily> left_unitor(const Profunctor& P);
/// P ∘ hom_A ≅ P, (h, p) ↦ P(h, 1) p.
Checked<NatFamily> right_unitor(const Profunctor& P);
/// (R ∘ Q) ∘ P ⇒ R ∘ (Q ∘ P), (p, (q, r)) ↦ ((p, q), r).
Checked<NatFamily> associator(const Profunctor& R, const Profunctor& Q, const Profunctor& P);

/// Q ∘ α : Q ∘ P ⇒ Q ∘ P' for α: P ⇒ P'.
Checked<NatFamily> whisker_source(const Profunctor& Q, const Profunctor& P, const Profunctor& P2,
                                  const NatFamily& alpha);
/// β ∘ P : Q ∘ P ⇒ Q' ∘ P for β: Q ⇒ Q'.
Checked<NatFamily> whisker_target(const Profunctor& Q, const Profunctor& Q2, const NatFamily& beta,
                                  const Profunctor& P);

/// B(f, 1): A ⇸ B with body(a, b) = hom_B(f a, b); elements are arrow names.
Profunctor companion(const FinFunctor& f);
/// B(1, f): B ⇸ A with body(b, a) = hom_B(b, f a); elements are arrow names.
Profunctor conjoint(const FinFunctor& f);

/// companion(f) ⊣ conjoint(f) in profunctors, with unit hom_A ⇒ R ∘ L and
/// counit L ∘ R ⇒ hom_B.
struct ProfAdjunction {
  Profunctor left, right;
  NatFamily unit, counit;
};

/// Builds unit and counit from the elements of L and R read as arrows of the
/// codomain of f (unit h ↦ (id, f h), counit (k, h) ↦ h k) and verifies both
/// triangle identities by composing the whiskered cells with unitors and the
/// associator. L and R must be named like companion(f) and conjoint(f); a
/// corrupted action surfaces as NotWellDefined, UnitNotNatural,
/// CounitNotNatural or TriangleFails.
Checked<ProfAdjunction> check_companion_adjunction(const FinFunctor& f, const Profunctor& L, const Profunctor& R);
Checked<ProfAdjunction> check_companion_adjunction(const FinFunctor& f);

/// companion(g f) ≅ companion(g) ∘ companion(f), (h, k) ↦ k g(h).
Checked<NatFamily> companion_composite_iso(const FinFunctor& f, const FinFunctor& g);

/// For f ⊣ u with unit η: companion(f) ≅ conjoint(u), h ↦ u(h) η_a.
Checked<NatFamily> mates_check(const AdjunctionWitness& adj);

/// 2-cells f ⇒ g against profunctor cells conjoint(f) ⇒ conjoint(g)
/// (postcomposition) and companion(g) ⇒ companion(f) (precomposition), both
/// checked bijective. Returns the number of 2-cells.
Checked<int> local_ff_check(const FinFunctor& f, const FinFunctor& g);

/// For P: A × B ⇸ C, the profunctor A ⇸ op(B) × C with the same cells,
/// together with the verified hom-set bijection against every probe Q.
struct Curried {
  Profunctor curried;
  Cat target;  // op(B) × C
};
Curried curry_dualize(const Profunctor& P, const Cat& A, const Cat& B);
/// Inverse re-indexing back to A × B ⇸ C.
Profunctor uncurry(const Profunctor& curried, const Cat& A, const Cat& B, const Cat& C);
/// nat(P, Q) ≅ nat(curry P, curry Q), both enumerated and matched by
/// re-indexed components, and uncurry(curry P) == P.
Verdict check_curry_bijection(const Profunctor& P, const Profunctor& Q, const Cat& A, const Cat& B);

}  // namespace fcat
