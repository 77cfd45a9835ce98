#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcat/corpus.hpp"

namespace fcat {

// Axiom suites over lists of categories and functors. Every check records
// what it ran on and, when it fails, the violation with its witness.

struct SuiteCheck {
  std::string check;
  std::string subject;
  Verdict verdict;
  int count = 0;            // elements, pairs or cells verified
  std::string note;         // informational status, never a failure
  bool skipped = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool ok() const;
  int failures() const;
  const SuiteCheck* first_failure() const;
};

struct SuiteOptions {
  int probe_size = 2;
  std::uint64_t seed = 1;
};

/// Yoneda lemma and density for every presheaf sample, P₁f ⊣ P*f for every
/// functor and sample pair, and ya1, ya2, ya4 on every functor (composable
/// pairs for ya4).
SuiteResult yoneda_axioms_suite(const std::vector<corpus::NamedCat>& cats,
                                const std::vector<corpus::NamedFunctor>& functors, const SuiteOptions& opt = {});

/// Unit laws, associativity and lax idempotency of the presheaf monad.
SuiteResult relmonad_suite(const std::vector<corpus::NamedCat>& cats, const SuiteOptions& opt = {});

/// Kleisli composition against the coend on `pairs` random composable pairs,
/// unitors and associator on `triples` random triples.
SuiteResult kleisli_suite(const std::vector<corpus::NamedCat>& cats, int pairs = 100, int triples = 50,
                          const SuiteOptions& opt = {});

/// companion ⊣ conjoint for every functor, mates for every adjunction, local
/// full faithfulness for all parallel functor pairs between the categories
/// (pairs of categories with more than `max_functors` functors are skipped).
SuiteResult equipment_suite(const std::vector<corpus::NamedCat>& cats,
                            const std::vector<corpus::NamedFunctor>& functors,
                            const std::vector<corpus::NamedAdjunction>& adjunctions, int max_functors = 64);

/// The round trip on `cats`, then each planted mutation, expected caught.
SuiteResult main_theorem_suite(const std::vector<corpus::NamedCat>& cats, const SuiteOptions& opt = {});

/// formal_aft on every functor between lattices of at most `max_size`
/// elements, against the direct Galois-connection construction.
SuiteResult aft_suite(int max_size = 5);

/// Right adjoint of a monotone map by the direct Galois construction: r(m) is
/// the greatest l with f(l) ≤ m. nullopt when some such set has no greatest
/// element.
std::optional<std::vector<int>> galois_right_adjoint(const FinFunctor& f);

/// Coherence, normality and the four planted mutations on the skew corpus.
SuiteResult skew_suite(const SuiteOptions& opt = {});

/// Isbell adjunction on samples, self-duality of (co)representables, O and
/// Spec against their extension routes, triangle identities and the
/// ambidextrous pairing.
SuiteResult isbell_suite(const std::vector<corpus::NamedCat>& cats,
                         const std::vector<corpus::NamedFunctor>& functors, const SuiteOptions& opt = {});

}  // namespace fcat
