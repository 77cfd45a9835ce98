#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcat/fincore.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat::corpus {

Cat one();            // object x
Cat two();            // walking arrow u: 0 → 1, identities id0, id1
Cat discrete(int n);  // objects 0..n-1
Cat chain(int n);     // 0 < 1 < ... < n-1
Cat span();           // l <-p- c -q-> r
Cat parallel_pair();  // s, t: 0 → 1
Cat idempotent();     // one object, e∘e = e
Cat z2();             // one object, s∘s = id
Cat diamond();        // bot < l, r < top

struct NamedCat {
  std::string name;
  Cat cat;
};

/// The standard corpus: at most 4 objects and 12 arrows each.
std::vector<NamedCat> categories();

struct NamedSetFunctor {
  std::string name;
  SetFunctor functor;
};

/// Presheaves on A: every representable, the empty and terminal presheaves,
/// a coproduct of two representables and `random_count` seeded random ones
/// with values of size at most `max_size`.
std::vector<NamedSetFunctor> presheaves(const Cat& A, std::uint64_t seed, int random_count = 2,
                                        int max_size = 3);

/// Coproduct of two presheaves (or functors) on the same shape; elements are
/// tagged "x@0" and "x@1".
SetFunctor coproduct(const SetFunctor& F, const SetFunctor& G);

/// Uniformly sized random SetFunctor on `shape` with values of size in
/// [min_size, max_size]. Retries with fresh sizes when no functor exists.
SetFunctor random_set_functor(const Cat& shape, std::mt19937_64& rng, int max_size, int min_size = 0);

/// Random profunctor A ⇸ B with cells of size at most `max_size`.
Profunctor random_profunctor(const Cat& A, const Cat& B, std::mt19937_64& rng, int max_size);

/// Functors between corpus categories used by the suites.
struct NamedFunctor {
  std::string name;
  FinFunctor functor;
};
std::vector<NamedFunctor> functors();

/// Adjunctions between corpus posets as (left, right).
struct NamedAdjunction {
  std::string name;
  FinFunctor left, right;
};
std::vector<NamedAdjunction> adjunctions();

/// All lattices with at most n elements, one per isomorphism class, as
/// posets on objects "0".."k-1" numbered along a linear extension.
std::vector<FinLattice> lattices_up_to(int n);

}  // namespace fcat::corpus
