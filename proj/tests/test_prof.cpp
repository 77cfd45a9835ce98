#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fcat/corpus.hpp"
#include "fcat/exec.hpp"
#include "fcat/presheaf.hpp"
#include "fcat/prof.hpp"

using namespace fcat;

namespace {

std::vector<Cat> small_categories() {
  std::vector<Cat> out;
  for (const auto& [name, c] : corpus::categories())
    if (c->num_objects() <= 3) out.push_back(c);
  return out;
}

// Class count of ⊔_b P(a,b) × Q(b,c) under (P(1,g)x, y) ~ (x, Q(g,1)y),
// computed by repeated relabelling.
int closure_cell_size(const Profunctor& Q, const Profunctor& P, int a, int c) {
  const FinCat& B = *P.dst;
  std::vector<int> off(B.num_objects() + 1, 0);
  for (int b = 0; b < B.num_objects(); ++b) off[b + 1] = off[b] + P.at(a, b).size() * Q.at(b, c).size();
  const int n = off.back();
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::vector<std::pair<int, int>> rel;
  for (int g = 0; g < B.num_arrows(); ++g) {
    const int b = B.src(g), b2 = B.tgt(g);
    for (int x = 0; x < P.at(a, b).size(); ++x)
      for (int y = 0; y < Q.at(b2, c).size(); ++y) {
        const int l = off[b2] + P.act(P.src->identity(a), g, x) * Q.at(b2, c).size() + y;
        const int r = off[b] + x * Q.at(b, c).size() + Q.act(g, Q.dst->identity(c), y);
        rel.emplace_back(l, r);
      }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [l, r] : rel)
      if (label[l] != label[r]) {
        const int lo = std::min(label[l], label[r]), hi = std::max(label[l], label[r]);
        for (int& v : label)
          if (v == hi) v = lo;
        changed = true;
      }
  }
  std::sort(label.begin(), label.end());
  return static_cast<int>(std::unique(label.begin(), label.end()) - label.begin());
}

}  // namespace

TEST(HomProf, WalkingArrow) {
  Profunctor H = hom_prof(corpus::two());
  EXPECT_EQ(H.at(0, 0).size(), 1);
  EXPECT_EQ(H.at(0, 1).size(), 1);
  EXPECT_EQ(H.at(1, 0).size(), 0);
  EXPECT_EQ(H.at(1, 1).size(), 1);
  EXPECT_FALSE(check_profunctor(H).has_value());
}

TEST(HomProf, PointAndDiscrete) {
  Profunctor H = hom_prof(corpus::one());
  EXPECT_EQ(H.at(0, 0).size(), 1);
  Profunctor D = hom_prof(corpus::discrete(2));
  EXPECT_EQ(D.at(0, 0).size(), 1);
  EXPECT_EQ(D.at(0, 1).size(), 0);
  EXPECT_EQ(D.at(1, 1).size(), 1);
}

TEST(ComposeCoend, DiscreteMiddleIsSumOfProducts) {
  std::mt19937_64 rng(2);
  Cat two = corpus::two(), d2 = corpus::discrete(2);
  Profunctor P = corpus::random_profunctor(two, d2, rng, 3);
  Profunctor Q = corpus::random_profunctor(d2, two, rng, 3);
  Profunctor QP = compose_coend(Q, P);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      EXPECT_EQ(QP.at(a, c).size(), P.at(a, 0).size() * Q.at(0, c).size() + P.at(a, 1).size() * Q.at(1, c).size());
}

TEST(ComposeCoend, MatchesRelationClosure) {
  std::mt19937_64 rng(7);
  auto cats = small_categories();
  for (int t = 0; t < 40; ++t) {
    const Cat& A = cats[rng() % cats.size()];
    const Cat& B = cats[rng() % cats.size()];
    const Cat& C = cats[rng() % cats.size()];
    Profunctor P = corpus::random_profunctor(A, B, rng, 2);
    Profunctor Q = corpus::random_profunctor(B, C, rng, 2);
    Profunctor QP = compose_coend(Q, P);
    ASSERT_FALSE(check_profunctor(QP).has_value());
    for (int a = 0; a < A->num_objects(); ++a)
      for (int c = 0; c < C->num_objects(); ++c) EXPECT_EQ(QP.at(a, c).size(), closure_cell_size(Q, P, a, c));
  }
}

TEST(ComposeCoend, ElementsAreTaggedPairs) {
  Cat one = corpus::one();
  Profunctor H = hom_prof(one);
  Profunctor HH = compose_coend(H, H);
  EXPECT_EQ(HH.at(0, 0).elems, std::vector<Id>{"(id_x,id_x)@x"});
}

TEST(ComposeCoend, ShapeMismatchThrows) {
  EXPECT_THROW(compose_coend(hom_prof(corpus::two()), hom_prof(corpus::one())), Error);
}

TEST(ComposeCoend, Deterministic) {
  std::mt19937_64 rng(9);
  Cat sp = corpus::span(), two = corpus::two();
  Profunctor P = corpus::random_profunctor(two, sp, rng, 2);
  Profunctor Q = corpus::random_profunctor(sp, two, rng, 2);
  const Exec saved = default_exec();
  set_default_exec(Exec::serial);
  Profunctor s = compose_coend(Q, P);
  set_default_exec(Exec::parallel);
  Profunctor p = compose_coend(Q, P);
  set_default_exec(saved);
  EXPECT_EQ(s.body, p.body);
}

TEST(UnitLaws, OnRandomProfunctors) {
  std::mt19937_64 rng(11);
  auto cats = small_categories();
  for (int t = 0; t < 30; ++t) {
    const Cat& A = cats[rng() % cats.size()];
    const Cat& B = cats[rng() % cats.size()];
    Profunctor P = corpus::random_profunctor(A, B, rng, 3);
    auto l = left_unitor(P), r = right_unitor(P);
    EXPECT_TRUE(l.ok()) << l.violation().str();
    EXPECT_TRUE(r.ok()) << r.violation().str();
  }
}

TEST(Associativity, OnRandomTriples) {
  std::mt19937_64 rng(13);
  auto cats = small_categories();
  for (int t = 0; t < 30; ++t) {
    const Cat& A = cats[rng() % cats.size()];
    const Cat& B = cats[rng() % cats.size()];
    const Cat& C = cats[rng() % cats.size()];
    const Cat& D = cats[rng() % cats.size()];
    Profunctor P = corpus::random_profunctor(A, B, rng, 2);
    Profunctor Q = corpus::random_profunctor(B, C, rng, 2);
    Profunctor R = corpus::random_profunctor(C, D, rng, 2);
    auto a = associator(R, Q, P);
    EXPECT_TRUE(a.ok()) << a.violation().str();
  }
}

TEST(Companion, IdentityIsHom) {
  for (const Cat& A : small_categories()) {
    EXPECT_EQ(companion(identity_functor(A)).body, hom_prof(A).body);
    EXPECT_EQ(conjoint(identity_functor(A)).body, hom_prof(A).body);
  }
}

TEST(Companion, PointIntoWalkingArrow) {
  Cat one = corpus::one(), two = corpus::two();
  Profunctor C = companion(make_functor(one, two, {0}, {0}));
  EXPECT_EQ(C.at(0, 0).elems, std::vector<Id>{"id0"});
  EXPECT_EQ(C.at(0, 1).elems, std::vector<Id>{"u"});
  Profunctor J = conjoint(make_functor(one, two, {0}, {0}));
  EXPECT_EQ(J.at(0, 0).elems, std::vector<Id>{"id0"});
  EXPECT_TRUE(J.at(1, 0).elems.empty());
}

TEST(Companion, ValidOnCorpus) {
  for (const auto& [name, f] : corpus::functors()) {
    EXPECT_FALSE(check_profunctor(companion(f)).has_value()) << name;
    EXPECT_FALSE(check_profunctor(conjoint(f)).has_value()) << name;
  }
}

TEST(Equipment, CompanionConjointTriangles) {
  for (const auto& [name, f] : corpus::functors()) {
    auto r = check_companion_adjunction(f);
    EXPECT_TRUE(r.ok()) << name << ": " << r.violation().str();
  }
}

TEST(Equipment, CorruptedCompanionIsCaught) {
  // Companion of the identity on the idempotent monoid with its covariant
  // action replaced by the trivial one: still a profunctor, no longer hom.
  Cat idem = corpus::idempotent();
  FinFunctor id = identity_functor(idem);
  Profunctor L = companion(id);
  const int m = idem->num_arrows();
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) L.body.maps[L.arrow(u, v)] = L.body.maps[L.arrow(u, idem->identity(0))];
  ASSERT_FALSE(check_profunctor(L).has_value());
  auto r = check_companion_adjunction(id, L, conjoint(id));
  ASSERT_FALSE(r.ok());
  const std::string& k = r.violation().kind;
  EXPECT_TRUE(k == "NotWellDefined" || k == "UnitNotNatural" || k == "CounitNotNatural" ||
              k == "TriangleFails")
      << r.violation().str();
  EXPECT_FALSE(r.violation().witness.empty());
}

TEST(Equipment, CompanionOfComposite) {
  auto fs = corpus::functors();
  int pairs = 0;
  for (const auto& [nf, f] : fs)
    for (const auto& [ng, g] : fs) {
      if (!same_category(f.cod, g.dom)) continue;
      auto r = companion_composite_iso(f, g);
      EXPECT_TRUE(r.ok()) << ng << " after " << nf << ": " << r.violation().str();
      ++pairs;
    }
  EXPECT_GE(pairs, 10);
}

TEST(Equipment, LocalFullFaithfulness) {
  int cells = 0;
  for (const Cat& A : small_categories())
    for (const Cat& B : small_categories()) {
      auto fs = all_functors(A, B);
      if (fs.size() > 12) continue;
      for (const auto& f : fs)
        for (const auto& g : fs) {
          auto r = local_ff_check(f, g);
          ASSERT_TRUE(r.ok()) << r.violation().str();
          EXPECT_EQ(r.value(), static_cast<int>(all_nats(f, g).size()));
          cells += r.value();
        }
    }
  EXPECT_GT(cells, 0);
}

TEST(Mates, CorpusAdjunctions) {
  for (const auto& [name, l, r] : corpus::adjunctions()) {
    auto adj = check_thin_adjunction(l, r);
    ASSERT_TRUE(adj.ok()) << name;
    auto m = mates_check(adj.value());
    EXPECT_TRUE(m.ok()) << name << ": " << m.violation().str();
  }
}

TEST(Mates, IdentityIsLiteral) {
  Cat two = corpus::two();
  auto adj = check_thin_adjunction(identity_functor(two), identity_functor(two));
  ASSERT_TRUE(adj.ok());
  auto m = mates_check(adj.value());
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(m.value(), identity_family(companion(identity_functor(two)).body));
}

TEST(Mates, GaloisOnChain) {
  Cat two = corpus::two(), c3 = corpus::chain(3);
  auto adj = check_thin_adjunction(thin_functor(c3, two, {0, 1, 1}), thin_functor(two, c3, {0, 2}));
  ASSERT_TRUE(adj.ok());
  auto m = mates_check(adj.value());
  ASSERT_TRUE(m.ok());
  // hom(f a, b) and hom(a, u b) are both truth values.
  const Profunctor C = companion(adj.value().left);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b) EXPECT_EQ(C.at(a, b).size(), c3->hom(a, b == 0 ? 0 : 2).empty() ? 0 : 1);
}

TEST(Curry, PointCase) {
  Cat one = corpus::one();
  Cat oo = product_cat(one, one);
  Profunctor P = Profunctor{oo, one, constant_set_functor(product_cat(op_cat(oo), one), FinSet{{"s"}})};
  Curried c = curry_dualize(P, one, one);
  EXPECT_EQ(c.curried.at(0, 0).elems, std::vector<Id>{"s"});
  EXPECT_FALSE(check_curry_bijection(P, P, one, one).has_value());
}

TEST(Curry, KeepsCells) {
  Cat one = corpus::one(), two = corpus::two();
  Cat tb = product_cat(two, one);
  std::mt19937_64 rng(17);
  Profunctor R = corpus::random_profunctor(tb, one, rng, 3);
  Curried c = curry_dualize(R, two, one);
  for (int a = 0; a < 2; ++a) EXPECT_EQ(c.curried.at(a, 0), R.at(a, 0));
}

TEST(Curry, RandomTriples) {
  std::mt19937_64 rng(19);
  auto cats = small_categories();
  for (int t = 0; t < 15; ++t) {
    const Cat& A = cats[rng() % cats.size()];
    const Cat& B = cats[rng() % cats.size()];
    const Cat& C = cats[rng() % cats.size()];
    if (A->num_objects() * B->num_objects() > 4) continue;
    Cat AB = product_cat(A, B);
    Profunctor P = corpus::random_profunctor(AB, C, rng, 2);
    Profunctor Q = corpus::random_profunctor(AB, C, rng, 2);
    auto v = check_curry_bijection(P, Q, A, B);
    EXPECT_FALSE(v.has_value()) << v->str();
  }
}
