#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcat/corpus.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

// Left skew-monoidal structure on functors X → FinSet relative to a root
// J: X → FinSet, with F ◁ G = J₁F · G and
//   (J₁F)(S) = ∫^x Set(J x, S) × F x.
// Elements of (J₁F)(S) are classes of raw triples (x, h, a) with h a table
// J x → S and a ∈ F x; ids are "([h],a)@x" with h written as indices into S.

/// Single-point corruptions of the structure maps, applied at the first
/// object of X wherever the map is evaluated.
enum class SkewMutation { none, gamma_swap, gamma_shift, lambda_shift, rho_shift };

struct SkewContext {
  Cat X;
  SetFunctor J;
  std::vector<FinSet> probes;  // probe sets, sizes 0..probe_size
  SkewMutation mutation = SkewMutation::none;
};

/// Throws InvalidRoot when J is not a functor on X.
SkewContext make_skew_context(const Cat& X, const SetFunctor& J, int probe_size = 2);
FinSet probe_set(int n);  // {"0", ..., "n-1"}

/// (J₁F)(S) for a finite set S of the given size.
struct JExtension {
  Colimit colim;
  std::vector<int> reps;  // carrier index of each class representative
  int s_size = 0;
  std::vector<int> f_size;  // |F x|
  std::vector<int> j_size;  // |J x|

  int cls(int x, const std::vector<int>& h, int a) const;
  struct Raw {
    int x;
    std::vector<int> h;
    int a;
  };
  Raw witness(int k) const;
  int size() const { return colim.num_classes(); }
};
JExtension extend_at(const SkewContext& ctx, const SetFunctor& F, const FinSet& S);

/// F ◁ G with the extension data at every x.
struct SkewProduct {
  SetFunctor value;
  std::vector<JExtension> at;  // (J₁F)(G x)
};
SkewProduct skew_prod(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G);

/// Components of a structure map, one index table per object of X.
struct SkewMap {
  std::string which;
  NatFamily comp;
};

/// γ: (A◁B)◁C → A◁(B◁C),
/// [h, [k, a]@x1]@x2 ↦ [j ↦ [h, k j]@x2, a]@x1.
NatFamily gamma_map(const SkewContext& ctx, const SkewProduct& AB, const SkewProduct& AB_C, const SkewProduct& BC,
                    const SkewProduct& A_BC);
/// λ: J◁A → A, [h, j]@x' ↦ h j.
NatFamily lambda_map(const SkewContext& ctx, const SkewProduct& JA);
/// ρ: A → A◁J, a ↦ [id, a]@x.
NatFamily rho_map(const SkewContext& ctx, const SetFunctor& A, const SkewProduct& AJ);
/// α ◁ C = J₁α * C: [h, a]@x' ↦ [h, α a]@x'.
NatFamily whisker_first(const SkewProduct& from, const SkewProduct& to, const NatFamily& alpha);
/// A ◁ β = J₁A * β: [h, a]@x' ↦ [β h, a]@x'.
NatFamily whisker_second(const SkewProduct& from, const SkewProduct& to, const NatFamily& beta);

SkewMap gamma_at(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G, const SetFunctor& H);
SkewMap lambda_at(const SkewContext& ctx, const SetFunctor& F);
SkewMap rho_at(const SkewContext& ctx, const SetFunctor& G);

struct CoherenceReport {
  std::vector<int> checked;  // elements compared, per axiom skm1..skm4
  std::vector<int> probe_sizes;
};

/// Both legs of skm1 (skew associativity), skm2 (left and right unit), skm3
/// (λ_J ρ_J = 1) and skm4 (interpolated zig-zag) at every object of X,
/// compared elementwise. K in skm1 and G in skm2/skm4 additionally range over
/// the constant functors at the probe sets.
/// Violation: DiagramFails("skmN,object,element").
Checked<CoherenceReport> check_coherence(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G,
                                         const SetFunctor& H, const SetFunctor& K);

struct NormalityReport {
  bool fully_faithful = false;     // J: X(x, y) → Set(J x, J y) bijective
  bool dense = false;              // σ_S: (J₁J)(S) → S bijective at every probe
  bool rho_invertible = false;     // on corepresentables and samples
  bool lambda_invertible = false;  // on probe constants and samples
  bool gamma_invertible = false;   // on triples of samples
  std::string rho_witness, lambda_witness, gamma_witness;

  bool consistent() const { return rho_invertible == fully_faithful && lambda_invertible == dense; }
};
NormalityReport normality_report(const SkewContext& ctx, const std::vector<SetFunctor>& samples);

/// ϖ: U ⇒ W◁J against its mate •ϖ: J₁U ⇒ J₁W, evaluated at every probe
/// set and every J x: checks (•ϖ)• = ϖ for all ϖ, naturality of •ϖ along all
/// functions between probes, and •((•ϖ)•) = •ϖ. Returns the number of cells.
Checked<int> mate_roundtrip(const SkewContext& ctx, const SetFunctor& U, const SetFunctor& W);

/// The category of all functions between the sets {0..n-1} for n in `sizes`,
/// with its inclusion into FinSet.
struct FinSetFragment {
  Cat X;
  SetFunctor J;
};
FinSetFragment finset_fragment(const std::vector<int>& sizes);

struct SkewInstance {
  std::string name;
  SkewContext ctx;
  std::vector<corpus::NamedSetFunctor> samples;  // J first, then seeded ones
};
/// The shipped instances: a point with J of size 1 and 2, the fragment on
/// {1, 2}, the walking arrow into a non-full J, and two discrete points.
std::vector<SkewInstance> skew_corpus(std::uint64_t seed = 1, int probe_size = 2);

}  // namespace fcat
