#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcat/corpus.hpp"
#include "fcat/presheaf.hpp"

namespace fcat {

// Isbell duality O ⊣ Spec between presheaves on A and the opposite of
// copresheaves on A:
//   (O F)(b) = nat(F, y b),   (Spec G)(a) = nat(G, z a).
// Presheaves have shape op_cat(A); copresheaves are kept in a separate type
// with shape A so the two variances never mix silently.

struct Copresheaf {
  SetFunctor functor;  // shape A
};
/// z(a) = hom_A(a, −).
Copresheaf corep(const Cat& A, int a);

/// O F with the natural family behind every element.
struct IsbellO {
  Copresheaf value;
  std::vector<std::vector<NatFamily>> families;  // [b][k]: F ⇒ y b, nat_hom order
};
IsbellO isbell_O(const Cat& A, const SetFunctor& F);

/// Spec G with the natural family behind every element.
struct IsbellSpec {
  SetFunctor value;
  std::vector<std::vector<NatFamily>> families;  // [a][k]: G ⇒ z a, nat_hom order
};
IsbellSpec isbell_Spec(const Cat& A, const Copresheaf& G);

/// η_F: F ⇒ Spec O F, s ∈ F a ↦ (α ↦ α_a(s)).
struct IsbellUnit {
  IsbellO o;
  IsbellSpec spec_o;
  NatFamily unit;
  bool invertible = false;
};
IsbellUnit isbell_unit(const Cat& A, const SetFunctor& F);

/// ε_G: G ⇒ O Spec G in copresheaves, t ∈ G b ↦ (β ↦ β_b(t)).
struct IsbellCounit {
  IsbellSpec spec;
  IsbellO o_spec;
  NatFamily counit;
  bool invertible = false;
};
IsbellCounit isbell_counit(const Cat& A, const Copresheaf& G);

/// (O F)(b) against the limit of hom_A(a, b) over the elements (a, s) of F,
/// i.e. Lan_y z evaluated at F, through α ↦ (α_a(s))_{(a,s)}. Checked
/// bijective at every b and natural. Returns the elements matched.
/// Violation: ExtensionMismatch(object).
Checked<int> check_O_via_extension(const Cat& A, const SetFunctor& F);
/// Dually (Spec G)(a) against the limit of hom_A(a, b) over the elements
/// (b, t) of G.
Checked<int> check_Spec_via_extension(const Cat& A, const Copresheaf& G);

struct NamedCopresheaf {
  std::string name;
  Copresheaf value;
};

struct IsbellSamples {
  std::vector<corpus::NamedSetFunctor> presheaves;
  std::vector<NamedCopresheaf> copresheaves;
};
/// Representables, corepresentables, empty, terminal and `random_count`
/// seeded random ones of each variance with values of size at most 2.
IsbellSamples isbell_samples(const Cat& A, std::uint64_t seed, int random_count = 1);

/// nat(G, O F) → nat(F, Spec G), ψ ↦ Spec(ψ)·η_F, checked bijective and equal
/// to the transpose (φ_a(s))_b(t) = (ψ_b(t))_a(s). Returns |nat(F, Spec G)|.
/// Violation: BijectionFails(witness).
Checked<int> isbell_bijection(const Cat& A, const SetFunctor& F, const Copresheaf& G);

struct IsbellReport {
  int pairs = 0;
  int elements = 0;
};
/// isbell_bijection on every (presheaf, copresheaf) pair of the samples.
/// Violation: BijectionFails("F,G: witness").
Checked<IsbellReport> isbell_adjunction_check(const Cat& A, const IsbellSamples& samples);

struct SelfDuality {
  NatFamily unit;
  bool self_dual = false;
};
/// Whether η_F is invertible. Not being self-dual is an ordinary outcome.
SelfDuality self_duality_check(const Cat& A, const SetFunctor& F);
SelfDuality self_duality_check(const Cat& A, const Copresheaf& G);

/// Triangle identities Spec(ε_G)·η_{Spec G} = 1 and O(η_F)·ε_{O F} = 1.
/// Violation: TriangleFails("spec|o").
Verdict check_isbell_triangles(const Cat& A, const SetFunctor& F, const Copresheaf& G);

/// Whether η at Spec G is invertible. The triangle identity only makes it a
/// split mono; on the parallel pair it can fail (Spec G = (4, 1) against
/// Spec O Spec G = (16, 1)).
bool spec_is_fixed(const Cat& A, const Copresheaf& G);

struct PairingItem {
  std::string check;
  std::string subject;
  Verdict verdict;
};
/// (i) z(a) coincides with y(a) computed on op_cat(A); for every f: A → B in
/// `functors`:
/// (ii) the colimit of hom_A(a, −) over (b ↓ f)^op is hom_B(b, f −)
/// through [(a, h), k] ↦ f(k)·h (Ran_f z exhibited by B(1, f)), and every
/// copresheaf sample is recovered from corepresentables over its elements;
/// (iii) ran_set(f, G)(b) ≅ nat(N(b), G) where N is the nerve of op f read
/// as copresheaves, plus the right universal property.
std::vector<PairingItem> ambidextrous_pairing_check(const Cat& A, const std::vector<FinFunctor>& functors,
                                                    const std::vector<NamedCopresheaf>& samples);

}  // namespace fcat
