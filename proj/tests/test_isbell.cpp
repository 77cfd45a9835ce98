#include <gtest/gtest.h>

#include <functional>

#include "fcat/corpus.hpp"
#include "fcat/isbell.hpp"

using namespace fcat;

namespace {

// Every assignment of elements, kept when naturality holds at every arrow.
// Independent of nat_hom's propagation order.
std::vector<NatFamily> brute_nats(const SetFunctor& F, const SetFunctor& H) {
  const FinCat& C = *F.shape;
  std::vector<std::pair<int, int>> vars;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int i = 0; i < F.sets[x].size(); ++i) vars.emplace_back(x, i);
  std::vector<NatFamily> out;
  NatFamily cur;
  for (int x = 0; x < C.num_objects(); ++x) cur.comp.emplace_back(F.sets[x].size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == vars.size()) {
      for (int g = 0; g < C.num_arrows(); ++g)
        for (int i = 0; i < F.sets[C.src(g)].size(); ++i)
          if (H.maps[g][cur.comp[C.src(g)][i]] != cur.comp[C.tgt(g)][F.maps[g][i]]) return;
      out.push_back(cur);
      return;
    }
    const auto [x, i] = vars[k];
    for (int v = 0; v < H.sets[x].size(); ++v) {
      cur.comp[x][i] = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

std::vector<Cat> isbell_categories() {
  std::vector<Cat> out;
  for (const auto& c : corpus::categories()) out.push_back(c.cat);
  return out;
}

int arrow_named(const Cat& C, const std::string& name) {
  for (int g = 0; g < C->num_arrows(); ++g)
    if (C->arrow_name(g) == name) return g;
  return -1;
}

// Presheaf on the walking arrow with F(0) = {p, q}, F(1) = {r}.
SetFunctor two_one() {
  const Cat two = corpus::two();
  std::vector<std::vector<int>> maps(3);
  maps[arrow_named(two, "id0")] = {0, 1};
  maps[arrow_named(two, "id1")] = {0};
  maps[arrow_named(two, "u")] = {1};  // F(u): F(1) → F(0), r ↦ q
  return make_set_functor(op_cat(two), {FinSet{{"p", "q"}}, FinSet{{"r"}}}, maps);
}

}  // namespace

TEST(IsbellO, RepresentableGoesToCorepresentable) {
  for (const Cat& A : isbell_categories())
    for (int a = 0; a < A->num_objects(); ++a) {
      const IsbellO o = isbell_O(A, yoneda(A, a));
      EXPECT_FALSE(check_set_functor(o.value.functor));
      EXPECT_TRUE(find_iso(o.value.functor, corepresentable(A, a)).has_value()) << A->object_name(a);
    }
}

TEST(IsbellO, EmptyIsTerminal) {
  const Cat two = corpus::two();
  const IsbellO o = isbell_O(two, empty_set_functor(op_cat(two)));
  for (const auto& s : o.value.functor.sets) EXPECT_EQ(s.size(), 1);
}

TEST(IsbellO, WalkingArrowTwoOne) {
  const Cat two = corpus::two();
  const SetFunctor F = two_one();
  const IsbellO o = isbell_O(two, F);
  for (int b = 0; b < 2; ++b)
    EXPECT_EQ(o.value.functor.sets[b].size(), static_cast<int>(brute_nats(F, yoneda(two, b)).size()));
  // Into y(0) nothing works: r would need an arrow 1 → 0.
  EXPECT_EQ(o.value.functor.sets[0].size(), 0);
  EXPECT_EQ(o.value.functor.sets[1].size(), 1);
}

TEST(IsbellO, MatchesBruteForceOnCorpus) {
  for (const Cat& A : isbell_categories())
    for (const auto& F : corpus::presheaves(A, 3, 2, 2)) {
      const IsbellO o = isbell_O(A, F.functor);
      ASSERT_FALSE(check_set_functor(o.value.functor)) << F.name;
      for (int b = 0; b < A->num_objects(); ++b) {
        const auto brute = brute_nats(F.functor, yoneda(A, b));
        EXPECT_EQ(o.families[b], brute) << F.name;
      }
    }
}

TEST(IsbellSpec, CorepresentableGoesToRepresentable) {
  for (const Cat& A : isbell_categories())
    for (int a = 0; a < A->num_objects(); ++a) {
      const IsbellSpec s = isbell_Spec(A, corep(A, a));
      EXPECT_FALSE(check_set_functor(s.value));
      EXPECT_TRUE(find_iso(s.value, yoneda(A, a)).has_value()) << A->object_name(a);
    }
}

TEST(IsbellSpec, TerminalCountsCones) {
  for (const Cat& A : isbell_categories()) {
    const SetFunctor one = constant_set_functor(A, FinSet{{"*"}});
    const IsbellSpec s = isbell_Spec(A, Copresheaf{one});
    for (int a = 0; a < A->num_objects(); ++a)
      EXPECT_EQ(s.value.sets[a].size(), static_cast<int>(brute_nats(one, corepresentable(A, a)).size()));
  }
  // On the walking arrow only 0 reaches everything.
  const Cat two = corpus::two();
  const IsbellSpec s = isbell_Spec(two, Copresheaf{constant_set_functor(two, FinSet{{"*"}})});
  EXPECT_EQ(s.value.sets[0].size(), 1);
  EXPECT_EQ(s.value.sets[1].size(), 0);
}

TEST(IsbellSpec, ShapeIsChecked) {
  const Cat two = corpus::two();
  EXPECT_THROW(isbell_Spec(two, Copresheaf{yoneda(two, 0)}), Error);
  EXPECT_THROW(isbell_O(two, corepresentable(two, 0)), Error);
}

TEST(ExtensionRoute, OAgreesOnCorpus) {
  for (const Cat& A : isbell_categories())
    for (const auto& F : corpus::presheaves(A, 7, 2, 2)) {
      auto r = check_O_via_extension(A, F.functor);
      ASSERT_TRUE(r.ok()) << F.name << ": " << r.violation().str();
      EXPECT_EQ(r.value(), isbell_O(A, F.functor).value.functor.total_size());
    }
}

TEST(ExtensionRoute, SpecAgreesOnCorpus) {
  for (const Cat& A : isbell_categories())
    for (const auto& G : isbell_samples(A, 7, 2).copresheaves) {
      auto r = check_Spec_via_extension(A, G.value);
      ASSERT_TRUE(r.ok()) << G.name << ": " << r.violation().str();
    }
}

TEST(Adjunction, RepresentablePair) {
  for (const Cat& A : isbell_categories())
    for (int a = 0; a < A->num_objects(); ++a) {
      auto r = isbell_bijection(A, yoneda(A, a), corep(A, a));
      ASSERT_TRUE(r.ok()) << r.violation().str();
      EXPECT_EQ(r.value(), static_cast<int>(A->hom(a, a).size()));
    }
}

TEST(Adjunction, EmptyPresheafIsInitial) {
  for (const Cat& A : isbell_categories())
    for (const auto& G : isbell_samples(A, 1).copresheaves) {
      auto r = isbell_bijection(A, empty_set_functor(op_cat(A)), G.value);
      ASSERT_TRUE(r.ok()) << r.violation().str();
      EXPECT_EQ(r.value(), 1);
    }
}

TEST(Adjunction, AllSamplePairs) {
  for (const Cat& A : isbell_categories())
    for (std::uint64_t seed : {1u, 2u}) {
      const IsbellSamples s = isbell_samples(A, seed);
      auto r = isbell_adjunction_check(A, s);
      ASSERT_TRUE(r.ok()) << r.violation().str();
      EXPECT_EQ(r.value().pairs, static_cast<int>(s.presheaves.size() * s.copresheaves.size()));
    }
}

TEST(Adjunction, CountMatchesPairings) {
  // Both sides count the natural pairings F a × G b → hom(a, b).
  for (const Cat& A : isbell_categories()) {
    const IsbellSamples s = isbell_samples(A, 4);
    for (const auto& F : s.presheaves)
      for (const auto& G : s.copresheaves) {
        auto r = isbell_bijection(A, F.functor, G.value);
        ASSERT_TRUE(r.ok());
        const IsbellSpec sp = isbell_Spec(A, G.value);
        EXPECT_EQ(r.value(), static_cast<int>(brute_nats(F.functor, sp.value).size()));
      }
  }
}

TEST(SelfDuality, RepresentablesAreSelfDual) {
  for (const Cat& A : isbell_categories())
    for (int a = 0; a < A->num_objects(); ++a) {
      EXPECT_TRUE(self_duality_check(A, yoneda(A, a)).self_dual);
      EXPECT_TRUE(self_duality_check(A, corep(A, a)).self_dual);
    }
}

TEST(SelfDuality, EmptyOnWalkingArrow) {
  // Spec O ∅ = Spec 1 has values (1, 0) while ∅ has (0, 0).
  const Cat two = corpus::two();
  const IsbellUnit u = isbell_unit(two, empty_set_functor(op_cat(two)));
  EXPECT_EQ(u.spec_o.value.sets[0].size(), 1);
  EXPECT_EQ(u.spec_o.value.sets[1].size(), 0);
  EXPECT_FALSE(self_duality_check(two, empty_set_functor(op_cat(two))).self_dual);
}

TEST(SelfDuality, CoproductOnDiscreteTwo) {
  // O(y0 + y1) is empty everywhere, Spec of it is terminal, matching y0 + y1.
  const Cat d2 = corpus::discrete(2);
  const SetFunctor F = corpus::coproduct(yoneda(d2, 0), yoneda(d2, 1));
  const IsbellUnit u = isbell_unit(d2, F);
  for (const auto& s : u.o.value.functor.sets) EXPECT_EQ(s.size(), 0);
  EXPECT_TRUE(u.invertible);
}

TEST(SelfDuality, UnitIsNaturalAndAgreesWithSizes) {
  for (const Cat& A : isbell_categories())
    for (const auto& F : corpus::presheaves(A, 5, 2, 2)) {
      const IsbellUnit u = isbell_unit(A, F.functor);
      EXPECT_FALSE(check_nat_family(F.functor, u.spec_o.value, u.unit)) << F.name;
      if (u.invertible) EXPECT_EQ(u.spec_o.value.total_size(), F.functor.total_size());
    }
}

TEST(SelfDuality, TriangleIdentities) {
  for (const Cat& A : isbell_categories()) {
    const IsbellSamples s = isbell_samples(A, 2, 2);
    for (const auto& F : s.presheaves)
      for (const auto& G : s.copresheaves) EXPECT_FALSE(check_isbell_triangles(A, F.functor, G.value)) << F.name << "," << G.name;
  }
}

TEST(SelfDuality, SpecFixedOnCorepresentables) {
  for (const Cat& A : isbell_categories())
    for (int a = 0; a < A->num_objects(); ++a) EXPECT_TRUE(spec_is_fixed(A, corep(A, a)));
}

TEST(SelfDuality, SpecNotFixedOnParallelPair) {
  // G = (∅, {p, q}): Spec G = (4, 1) while Spec O Spec G = (16, 1).
  const Cat pp = corpus::parallel_pair();
  const SetFunctor G = make_set_functor(pp, {FinSet{}, FinSet{{"p", "q"}}}, {{}, {}, {}, {0, 1}});
  const IsbellSpec sp = isbell_Spec(pp, Copresheaf{G});
  const IsbellUnit u = isbell_unit(pp, sp.value);
  EXPECT_EQ(sp.value.sets[0].size(), 4);
  EXPECT_EQ(u.spec_o.value.sets[0].size(), 16);
  EXPECT_EQ(static_cast<int>(brute_nats(u.o.value.functor, corepresentable(pp, 0)).size()), 16);
  EXPECT_FALSE(spec_is_fixed(pp, Copresheaf{G}));
  EXPECT_FALSE(check_isbell_triangles(pp, sp.value, Copresheaf{G}));
}

TEST(Ambidextrous, PointCollapses) {
  const Cat one = corpus::one();
  const auto items = ambidextrous_pairing_check(one, {identity_functor(one)}, isbell_samples(one, 1).copresheaves);
  for (const auto& i : items) EXPECT_FALSE(i.verdict) << i.check << " " << i.subject;
  EXPECT_EQ(corep(one, 0).functor.sets[0].size(), 1);
}

TEST(Ambidextrous, WalkingArrowHomTable) {
  const Cat two = corpus::two();
  const Copresheaf z0 = corep(two, 0);
  EXPECT_EQ(z0.functor.sets[0].elems, std::vector<Id>{"id0"});
  EXPECT_EQ(z0.functor.sets[1].elems, std::vector<Id>{"u"});
}

TEST(Ambidextrous, CorpusFunctors) {
  int checked = 0;
  for (const auto& c : corpus::categories()) {
    std::vector<FinFunctor> fs;
    for (const auto& f : corpus::functors())
      if (same_category(f.functor.dom, c.cat)) fs.push_back(f.functor);
    const auto items = ambidextrous_pairing_check(c.cat, fs, isbell_samples(c.cat, 3).copresheaves);
    for (const auto& i : items) {
      EXPECT_FALSE(i.verdict) << c.name << " " << i.check << " " << i.subject << ": " << i.verdict->str();
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}
