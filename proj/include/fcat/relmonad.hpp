#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fcat/corpus.hpp"
#include "fcat/kan.hpp"
#include "fcat/presheaf.hpp"

namespace fcat {

// The presheaf relative monad at a finite category A. P A is infinite, so
// every law is evaluated on a finite full subcategory `world` of P A that
// contains the representables; a nested sample is a presheaf on world.cat.

struct PresheafMonad {
  PresheafWorld world;
  /// η_A = y_A : A → world.cat.
  FinFunctor unit;
  /// μ_A(Ξ) = restrict(mult, Ξ). Canonically equal to `unit`.
  FinFunctor mult;

  const Cat& base() const { return world.base; }
  const Cat& cat() const { return world.cat; }
  SetFunctor multiply(const SetFunctor& xi) const { return restrict(mult, xi); }
  /// η_{P A}(F) for the world object p: the representable on world.cat.
  SetFunctor embed(int p) const { return yoneda(world.cat, p); }
};

/// World on the representables followed by `extras`, with μ := P*η_A.
PresheafMonad make_presheaf_monad(const Cat& A, const std::vector<std::pair<Id, SetFunctor>>& extras = {});
/// The world over A with `extra_count` seeded random presheaves of values of
/// size in [1, 2].
PresheafMonad sample_monad(const Cat& A, std::uint64_t seed, int extra_count = 1);

/// Nested samples on M.cat(): every representable (so representables of
/// representables), the empty and terminal presheaves and `random_count`
/// seeded random ones with values of size at most 2.
std::vector<corpus::NamedSetFunctor> nested_samples(const PresheafMonad& M, std::uint64_t seed,
                                                    int random_count = 2);

struct LawReport {
  int samples = 0;
  int elements = 0;  // elements matched by the verified bijections
};

/// For every world object F:
///  (i) μ(η F) ≅ F through α ↦ α_a(id_a), natural and bijective;
///  (ii) the unit F ⇒ μ(Lan_y F) of the extension along y is invertible.
/// Violation: LawFails("unit-left|unit-right,sample,object").
Checked<LawReport> check_unit_laws(const PresheafMonad& M);

/// A tower for associativity: `outer` is a presheaf monad over inner.cat()
/// and every top sample is a presheaf on outer.cat().
struct NestedTower {
  PresheafMonad inner;
  PresheafMonad outer;
  std::vector<corpus::NamedSetFunctor> top;
};
NestedTower sample_tower(const Cat& A, std::uint64_t seed);

/// μ_A ∘ P₁μ_A = μ_A ∘ μ_{P A} on every top sample Ξ. μ_A is realized as the
/// functor outer.cat() → W' with Φ ↦ μ_A(Φ), where W' is the inner world
/// extended by the new values; P₁μ_A is the left extension along it. The
/// comparison sends ξ ∈ Ξ(y y a) to its class at (y y a, ya → μ_A(y y a)) and
/// is checked natural and bijective in a. Requires inner.mult to land on the
/// representables. Violation: LawFails("assoc,sample,object").
Checked<LawReport> check_assoc_law(const NestedTower& t);

/// μ_A ⊣ η_{P A} with counit ε_F: μ(η F) → F, α ↦ α_a(id_a), checked
/// invertible for every world object, and unit θ_Ξ: Ξ ⇒ hom(−, μ Ξ),
/// ξ ↦ ((a, g) ↦ Ξ(ĝ) ξ), checked natural on every sample with both zig-zags.
/// Violations: CounitNotIso(sample), UnitNotNatural(sample), ZigZagFails(sample).
Checked<LawReport> lax_idempotency_witness(const PresheafMonad& M,
                                           const std::vector<corpus::NamedSetFunctor>& samples);

/// hom(−, P) restricted to the world, as a presheaf on M.cat(); elements are
/// nat_ids of the families.
SetFunctor hom_into(const PresheafMonad& M, const SetFunctor& P);

// ------------------------------------------------------------ algebras

struct AlgebraWitness {
  FinLattice carrier;
  std::vector<std::vector<int>> downsets;  // member lists, in enumeration order
  std::vector<int> structure;              // join of each down-set
  int unit_checks = 0;
  int mult_checks = 0;
  int alternatives = 0;  // monotone unital structure maps found (must be 1)
};

/// All down-sets of the lattice, empty first, each a sorted member list.
std::vector<std::vector<int>> downsets(const FinLattice& L);

/// a(F) = join of the support of F. Checks the unit axiom a(y l) = l, the
/// multiplication axiom on every nested sample over the world of `M` (which
/// must be over L.carrier), the Galois connection a ⊣ ↓ on down-sets with
/// a(↓l) = l, and that join is the only monotone unital map on down-sets.
/// Violation: LawFails(axiom, witness).
Checked<AlgebraWitness> algebra_check(const FinLattice& L, const PresheafMonad& M,
                                      const std::vector<corpus::NamedSetFunctor>& samples);
Checked<AlgebraWitness> algebra_check(const FinLattice& L);

// ------------------------------------------------------------- Kleisli

/// A 1-cell X ⇸ Y of the Kleisli bicategory: a functor X → P Y, stored as
/// the profunctor Y ⇸ X with body(y, x) = f(x)(y).
struct KleisliCell {
  Cat src;  // X
  Cat dst;  // Y
  Profunctor body;
};
KleisliCell kleisli_cell(const Profunctor& body);
/// η_X, i.e. hom_X.
KleisliCell kleisli_unit(const Cat& X);

/// g • f for f: X ⇸ Y, g: Y ⇸ Z. Cell (z, x) is the colimit of g(z, −)
/// weighted by f(x), with elements "t@(y,s)".
struct KleisliComposite {
  KleisliCell result;
  std::vector<WeightedColimit> cells;  // by result.body.cell(z, x)

  int cls(int z, int x, int y, int s, int t) const;
  /// (y, s, t) of the representative of class k in cell (z, x).
  std::array<int, 3> witness(int z, int x, int k) const;
};
KleisliComposite kleisli_compose_full(const KleisliCell& g, const KleisliCell& f);
KleisliCell kleisli_compose(const KleisliCell& g, const KleisliCell& f);

/// t@(y,s) ↦ (t,s)@y from g • f onto compose_coend(f.body, g.body), checked
/// well defined, natural and bijective, and matching the least raw triple
/// (y, t, s) of every class with that of its image. Violations:
/// NotWellDefined, NotNatural, NotIso, RepresentativeMismatch.
Checked<NatFamily> kleisli_vs_coend(const KleisliCell& g, const KleisliCell& f);

/// η • f ≅ f, t@(y,s) ↦ f(t) s.
Checked<NatFamily> kleisli_left_unit(const KleisliCell& f);
/// f • η ≅ f, t@(x',h) ↦ f(h) t.
Checked<NatFamily> kleisli_right_unit(const KleisliCell& f);
/// h • (g • f) ⇒ (h • g) • f.
Checked<NatFamily> kleisli_associator(const KleisliCell& h, const KleisliCell& g, const KleisliCell& f);

// ------------------------------------------------------- round trip

enum class RoundtripMutation { none, corrupt_chi, corrupt_mu, corrupt_companion };

struct StageResult {
  std::string stage;  // "a", "b" or "c"
  std::string check;
  std::string subject;
  Verdict verdict;
  int count = 0;
};

struct RoundtripReport {
  std::vector<StageResult> results;
  bool ok() const;
  /// First failing result, if any.
  const StageResult* first_failure() const;
};

/// (a) local full faithfulness on all pairs of parallel functors and
/// companion ⊣ conjoint for every functor; (b) the nerve rebuilt as
/// restrictions of representables with χ from identities, run through the
/// extension, absolute lifting, density and pasting checks; (c) μ := P*η_A
/// fed to the unit and associativity checks. Functors are all functors
/// between ordered pairs of `cats`. A mutation is planted on the identity of
/// the first category with a non-identity endomorphism.
RoundtripReport main_theorem_roundtrip(const std::vector<Cat>& cats,
                                       RoundtripMutation mutation = RoundtripMutation::none,
                                       std::uint64_t seed = 1);

}  // namespace fcat
