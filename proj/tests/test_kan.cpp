#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "fcat/corpus.hpp"
#include "fcat/kan.hpp"
#include "fcat/presheaf.hpp"

using namespace fcat;

namespace {

int power(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Equivalence classes by repeated relabelling until nothing changes.
int closure_class_count(int n, const std::vector<std::pair<int, int>>& rel) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : rel) {
      int m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        int la = label[a], lb = label[b];
        for (int& l : label)
          if (l == la || l == lb) l = m;
        changed = true;
      }
    }
  }
  std::sort(label.begin(), label.end());
  return static_cast<int>(std::unique(label.begin(), label.end()) - label.begin());
}

// Set(F c, G c') on op(C) × C for covariant F, G on C.
SetFunctor function_bifunctor(const Cat& C, const SetFunctor& F, const SetFunctor& G,
                              std::vector<std::vector<std::vector<int>>>& funs) {
  const FinCat& c = *C;
  const int n = c.num_objects(), m = c.num_arrows();
  SetFunctor H{product_cat(op_cat(C), C), {}, {}};
  funs.clear();
  std::vector<std::map<std::vector<int>, int>> index;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      funs.push_back(all_functions(F.sets[x].size(), G.sets[y].size()));
      FinSet s;
      std::map<std::vector<int>, int> idx;
      for (const auto& phi : funs.back()) {
        std::vector<Id> imgs;
        for (int v : phi) imgs.push_back(G.sets[y][v]);
        idx.emplace(phi, s.size());
        s.elems.push_back(table_id(imgs));
      }
      H.sets.push_back(std::move(s));
      index.push_back(std::move(idx));
    }
  // arrow (f, g): (tgt f, src g) → (src f, tgt g), φ ↦ G(g) φ F(f)
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int from = c.tgt(f) * n + c.src(g), to = c.src(f) * n + c.tgt(g);
      std::vector<int> table;
      for (const auto& phi : funs[from]) {
        std::vector<int> psi;
        for (int x = 0; x < F.sets[c.src(f)].size(); ++x) psi.push_back(G.maps[g][phi[F.maps[f][x]]]);
        table.push_back(index[to].at(psi));
      }
      H.maps.push_back(std::move(table));
    }
  return H;
}

SetFunctor hom_bifunctor(const Cat& A) {
  const FinCat& c = *A;
  const int n = c.num_objects(), m = c.num_arrows();
  const auto pos = hom_positions(c);
  SetFunctor H{product_cat(op_cat(A), A), {}, {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      FinSet s;
      for (int h : c.hom(x, y)) s.elems.push_back(c.arrow_name(h));
      H.sets.push_back(std::move(s));
    }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      std::vector<int> t;
      for (int h : c.hom(c.tgt(f), c.src(g))) t.push_back(pos[c.compose(g, c.compose(h, f))]);
      H.maps.push_back(std::move(t));
    }
  return H;
}

std::vector<Cat> small_categories() {
  std::vector<Cat> out;
  for (const auto& [name, c] : corpus::categories())
    if (c->num_objects() <= 3) out.push_back(c);
  return out;
}

int lattice_join_of_below(const FinLattice& L, const FinFunctor& f, const FinFunctor& g, int c) {
  int acc = L.bottom;
  for (int a = 0; a < f.dom->num_objects(); ++a)
    if (!g.cod->hom(g.obj[a], c).empty()) acc = L.join(acc, f.obj[a]);
  return acc;
}

// Galois right adjoint by brute force: r(b) is the largest a with f a ≤ b,
// if the set {a : f a ≤ b} has a largest element.
std::optional<std::vector<int>> galois_right_adjoint(const FinFunctor& f) {
  const FinCat& L = *f.dom;
  const FinCat& M = *f.cod;
  std::vector<int> r;
  for (int b = 0; b < M.num_objects(); ++b) {
    int best = -1;
    for (int a = 0; a < L.num_objects(); ++a) {
      bool top = true;
      for (int a2 = 0; a2 < L.num_objects(); ++a2) {
        const bool below = !M.hom(f.obj[a2], b).empty();
        if (below != !L.hom(a2, a).empty()) top = false;
      }
      if (top) best = a;
    }
    if (best < 0) return std::nullopt;
    r.push_back(best);
  }
  return r;
}

}  // namespace

// ------------------------------------------------------------- comma

TEST(Comma, IdentityOnPoint) {
  Cat one = corpus::one();
  CommaCat c = comma(identity_functor(one), 0);
  EXPECT_EQ(c.cat->num_objects(), 1);
  EXPECT_EQ(c.cat->num_arrows(), 1);
}

TEST(Comma, PointOverWalkingArrow) {
  Cat one = corpus::one(), two = corpus::two();
  CommaCat c = comma(make_functor(one, two, {0}, {0}), 1);
  ASSERT_EQ(c.cat->num_objects(), 1);
  EXPECT_EQ(c.cat->object_name(0), "(x,u)");
}

TEST(Comma, SliceOfWalkingArrow) {
  Cat two = corpus::two();
  CommaCat c = comma(identity_functor(two), 1);
  EXPECT_EQ(c.cat->num_objects(), 2);
  EXPECT_EQ(c.cat->num_arrows(), 3);
  EXPECT_FALSE(check_category_laws(c.cat->tables()).has_value());
  EXPECT_FALSE(check_functor(c.projection).has_value());
}

TEST(Comma, ValidOnCorpus) {
  for (const auto& [name, f] : corpus::functors())
    for (int b = 0; b < f.cod->num_objects(); ++b) {
      for (const CommaCat& c : {comma(f, b), coslice(f, b)}) {
        EXPECT_FALSE(check_category_laws(c.cat->tables()).has_value()) << name;
        EXPECT_FALSE(check_functor(c.projection).has_value()) << name;
      }
    }
}

// ------------------------------------------------------- extensions

TEST(Lan, AlongIdentity) {
  Cat sp = corpus::span();
  std::mt19937_64 rng(3);
  SetFunctor F = corpus::random_set_functor(sp, rng, 3);
  ExtensionResult E = lan_set(identity_functor(sp), F);
  auto iso = find_iso(F, E.extension);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_iso_family(E.unit, E.extension));
}

TEST(Lan, ToPointIsColimit) {
  std::mt19937_64 rng(5);
  for (const Cat& A : small_categories()) {
    SetFunctor F = corpus::random_set_functor(A, rng, 3);
    FinFunctor bang = constant_functor(A, corpus::one(), 0);
    ExtensionResult E = lan_set(bang, F);
    EXPECT_EQ(E.extension.sets[0].size(), colimit_of_diagram(F).num_classes());
  }
}

TEST(Lan, AgreesWithPresheafExtension) {
  for (const auto& [name, f] : corpus::functors())
    for (const auto& P : corpus::presheaves(f.dom, 9, 1)) {
      SetFunctor viaKan = lan_set(op_functor(f), P.functor).extension;
      SetFunctor viaPresheaf = extend(f, P.functor);
      EXPECT_TRUE(find_iso(viaKan, viaPresheaf).has_value()) << name << " " << P.name;
      EXPECT_EQ(viaKan.sets.size(), viaPresheaf.sets.size());
      for (std::size_t b = 0; b < viaKan.sets.size(); ++b) EXPECT_EQ(viaKan.sets[b].size(), viaPresheaf.sets[b].size());
    }
}

TEST(Lan, UniversalOnCorpus) {
  std::mt19937_64 rng(13);
  for (const auto& [name, K] : corpus::functors()) {
    if (K.cod->num_objects() > 3) continue;
    for (int t = 0; t < 2; ++t) {
      SetFunctor F = corpus::random_set_functor(K.dom, rng, 2);
      ExtensionResult E = lan_set(K, F);
      EXPECT_FALSE(check_set_functor(E.extension).has_value()) << name;
      EXPECT_FALSE(check_nat_family(F, precompose(E.extension, K), E.unit).has_value()) << name;
      for (int p = 0; p < 3; ++p) {
        SetFunctor G = corpus::random_set_functor(K.cod, rng, 2);
        auto v = check_lan_universal(E, K, F, G);
        EXPECT_FALSE(v.has_value()) << name << ": " << v->str();
      }
    }
  }
}

TEST(Lan, ToPointCountsCocones) {
  // nat(Lan F, G) for K = ! and G constant of size k is Set(colim F, k).
  std::mt19937_64 rng(19);
  Cat one = corpus::one();
  for (const Cat& A : small_categories()) {
    SetFunctor F = corpus::random_set_functor(A, rng, 2);
    FinFunctor bang = constant_functor(A, one, 0);
    ExtensionResult E = lan_set(bang, F);
    for (int k = 0; k <= 2; ++k) {
      FinSet S;
      for (int i = 0; i < k; ++i) S.elems.push_back(std::to_string(i));
      SetFunctor G = constant_set_functor(one, S);
      EXPECT_FALSE(check_lan_universal(E, bang, F, G).has_value());
      EXPECT_EQ(static_cast<int>(nat_hom(E.extension, G).size()), power(k, colimit_of_diagram(F).num_classes()));
    }
  }
}

TEST(Ran, AlongIdentity) {
  Cat c3 = corpus::chain(3);
  std::mt19937_64 rng(4);
  SetFunctor F = corpus::random_set_functor(c3, rng, 3);
  ExtensionResult E = ran_set(identity_functor(c3), F);
  EXPECT_TRUE(find_iso(E.extension, F).has_value());
  EXPECT_TRUE(is_iso_family(E.unit, F));
}

TEST(Ran, ToPointIsLimit) {
  std::mt19937_64 rng(6);
  for (const Cat& A : small_categories()) {
    SetFunctor F = corpus::random_set_functor(A, rng, 3);
    ExtensionResult E = ran_set(constant_functor(A, corpus::one(), 0), F);
    EXPECT_EQ(E.extension.sets[0].size(), limit_of_diagram(F).apex.size());
  }
}

TEST(Ran, SingletonAlongBottomPoint) {
  Cat one = corpus::one(), two = corpus::two();
  FinFunctor c0 = make_functor(one, two, {0}, {0});
  ExtensionResult E = ran_set(c0, constant_set_functor(one, FinSet{{"*"}}));
  // Ran(b) = Set(hom(b, 0), 1): a singleton at both objects.
  EXPECT_EQ(E.extension.sets[0].size(), 1);
  EXPECT_EQ(E.extension.sets[1].size(), 1);
  FinFunctor c1 = make_functor(one, two, {1}, {1});
  ExtensionResult E1 = ran_set(c1, constant_set_functor(one, FinSet{{"a", "b"}}));
  EXPECT_EQ(E1.extension.sets[0].size(), 2);
  EXPECT_EQ(E1.extension.sets[1].size(), 2);
}

TEST(Ran, UniversalOnCorpus) {
  std::mt19937_64 rng(23);
  for (const auto& [name, K] : corpus::functors()) {
    if (K.cod->num_objects() > 3) continue;
    SetFunctor F = corpus::random_set_functor(K.dom, rng, 2);
    ExtensionResult E = ran_set(K, F);
    EXPECT_FALSE(check_set_functor(E.extension).has_value()) << name;
    for (int p = 0; p < 3; ++p) {
      SetFunctor G = corpus::random_set_functor(K.cod, rng, 2);
      auto v = check_ran_universal(E, K, F, G);
      EXPECT_FALSE(v.has_value()) << name << ": " << v->str();
    }
  }
}

TEST(Lan, CorruptedUnitIsRejected) {
  Cat two = corpus::two(), one = corpus::one();
  FinFunctor bang = constant_functor(two, one, 0);
  SetFunctor F = constant_set_functor(two, FinSet{{"a", "b"}});
  ExtensionResult E = lan_set(bang, F);
  ASSERT_EQ(E.extension.sets[0].size(), 2);
  E.unit.comp[0] = {0, 0};
  E.unit.comp[1] = {0, 0};
  EXPECT_TRUE(check_lan_universal(E, bang, F, constant_set_functor(one, FinSet{{"p", "q"}})).has_value());
}

// ------------------------------------------------------------ co/ends

TEST(Coend, OverPoint) {
  Cat one = corpus::one();
  SetFunctor F = constant_set_functor(product_cat(op_cat(one), one), FinSet{{"a", "b"}});
  EXPECT_EQ(coend(one, F).num_classes(), 2);
  EXPECT_EQ(end(one, F).apex.size(), 2);
}

TEST(Coend, DiscreteIsSumAndEndIsProduct) {
  Cat d2 = corpus::discrete(2);
  Cat p = product_cat(op_cat(d2), d2);
  SetFunctor F{p, {FinSet{{"a", "b"}}, FinSet{{"z"}}, FinSet{}, FinSet{{"c", "d", "e"}}}, {}};
  for (int f = 0; f < 2; ++f)
    for (int g = 0; g < 2; ++g) {
      std::vector<int> id(F.sets[f * 2 + g].size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      F.maps.push_back(id);
    }
  ASSERT_FALSE(check_set_functor(F).has_value());
  EXPECT_EQ(coend(d2, F).num_classes(), 5);
  EXPECT_EQ(end(d2, F).apex.size(), 6);
}

TEST(Coend, HomMatchesRelationClosure) {
  for (const Cat& A : small_categories()) {
    SetFunctor H = hom_bifunctor(A);
    ASSERT_FALSE(check_set_functor(H).has_value());
    const FinCat& c = *A;
    const int n = c.num_objects(), m = c.num_arrows();
    std::vector<int> off(n + 1, 0);
    for (int a = 0; a < n; ++a) off[a + 1] = off[a] + H.sets[a * n + a].size();
    std::vector<std::pair<int, int>> rel;
    for (int f = 0; f < m; ++f) {
      const int a = c.src(f), a2 = c.tgt(f);
      for (int x = 0; x < H.sets[a2 * n + a].size(); ++x)
        rel.emplace_back(off[a] + H.maps[f * m + c.identity(a)][x], off[a2] + H.maps[c.identity(a2) * m + f][x]);
    }
    EXPECT_EQ(coend(A, H).num_classes(), closure_class_count(off[n], rel));
  }
}

TEST(Coend, WalkingArrowHomHasTwoClasses) {
  EXPECT_EQ(coend(corpus::two(), hom_bifunctor(corpus::two())).num_classes(), 2);
}

TEST(End, FunctionBifunctorIsNatHom) {
  std::mt19937_64 rng(29);
  for (const Cat& C : small_categories()) {
    for (int t = 0; t < 3; ++t) {
      SetFunctor F = corpus::random_set_functor(C, rng, 2);
      SetFunctor G = corpus::random_set_functor(C, rng, 2);
      std::vector<std::vector<std::vector<int>>> funs;
      SetFunctor H = function_bifunctor(C, F, G, funs);
      ASSERT_FALSE(check_set_functor(H).has_value());
      Limit L = end(C, H);
      auto hom = nat_hom(F, G);
      ASSERT_EQ(L.apex.size(), static_cast<int>(hom.size()));
      const int n = C->num_objects();
      for (const auto& fam : L.families) {
        NatFamily a;
        for (int x = 0; x < n; ++x) a.comp.push_back(funs[x * n + x][fam[x]]);
        EXPECT_GE(index_of(hom, a), 0);
      }
    }
  }
}

TEST(Coend, EqualsWeightedColimitOfSeparatedBifunctor) {
  // ∫^a W(a) × D(a) is the colimit of D weighted by W.
  std::mt19937_64 rng(31);
  for (const Cat& A : small_categories()) {
    const FinCat& c = *A;
    const int n = c.num_objects(), m = c.num_arrows();
    SetFunctor W = corpus::random_set_functor(op_cat(A), rng, 2);
    SetFunctor D = corpus::random_set_functor(A, rng, 2);
    SetFunctor H{product_cat(op_cat(A), A), {}, {}};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        FinSet s;
        for (const auto& w : W.sets[x].elems)
          for (const auto& d : D.sets[y].elems) s.elems.push_back(tuple_id({w, d}));
        H.sets.push_back(std::move(s));
      }
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        const int dsz = D.sets[c.tgt(g)].size();
        std::vector<int> t;
        for (int w = 0; w < W.sets[c.tgt(f)].size(); ++w)
          for (int d = 0; d < D.sets[c.src(g)].size(); ++d) t.push_back(W.maps[f][w] * dsz + D.maps[g][d]);
        H.maps.push_back(std::move(t));
      }
    ASSERT_FALSE(check_set_functor(H).has_value());
    EXPECT_EQ(coend(A, H).num_classes(), weighted_colim(A, W, D).colimit.num_classes());
  }
}

// ----------------------------------------------------- weighted colimits

TEST(WeightedColim, RepresentableWeightEvaluates) {
  std::mt19937_64 rng(37);
  for (const Cat& A : small_categories()) {
    SetFunctor D = corpus::random_set_functor(A, rng, 3);
    for (int a = 0; a < A->num_objects(); ++a)
      EXPECT_EQ(weighted_colim(A, yoneda(A, a), D).colimit.num_classes(), D.sets[a].size());
  }
}

TEST(WeightedColim, TerminalWeightIsColimit) {
  std::mt19937_64 rng(41);
  for (const Cat& A : small_categories()) {
    SetFunctor D = corpus::random_set_functor(A, rng, 3);
    SetFunctor W = constant_set_functor(op_cat(A), FinSet{{"pt"}});
    EXPECT_EQ(weighted_colim(A, W, D).colimit.num_classes(), colimit_of_diagram(D).num_classes());
  }
}

TEST(WeightedColim, AdjunctionWithPowering) {
  std::mt19937_64 rng(43);
  for (const Cat& A : small_categories()) {
    for (int t = 0; t < 2; ++t) {
      SetFunctor D = corpus::random_set_functor(A, rng, 2);
      SetFunctor W = corpus::random_set_functor(op_cat(A), rng, 2);
      for (int k = 0; k <= 2; ++k) {
        FinSet S;
        for (int i = 0; i < k; ++i) S.elems.push_back("s" + std::to_string(i));
        auto v = check_weighted_adjunction(A, W, D, S);
        EXPECT_FALSE(v.has_value()) << v->str();
      }
    }
  }
}

TEST(Elements, ValidCategoryOfElements) {
  for (const auto& [name, A] : corpus::categories())
    for (const auto& W : corpus::presheaves(A, 47, 1)) {
      ElementsCat el = elements(A, W.functor);
      EXPECT_FALSE(check_category_laws(el.cat->tables()).has_value()) << name << " " << W.name;
      EXPECT_FALSE(check_functor(el.projection).has_value()) << name;
    }
}

// ------------------------------------------------------------ nerves

TEST(Nerve, IdentityGivesRepresentables) {
  Cat sp = corpus::span();
  Nerve N = nerve(identity_functor(sp));
  for (int b = 0; b < sp->num_objects(); ++b) EXPECT_EQ(N.body.column(b), yoneda(sp, b));
}

TEST(Nerve, PointIntoWalkingArrow) {
  Cat one = corpus::one(), two = corpus::two();
  Nerve N = nerve(make_functor(one, two, {0}, {0}));
  EXPECT_EQ(N.body.at(0, 1).elems, std::vector<Id>{"u"});
}

TEST(Nerve, IsRestrictedYoneda) {
  for (const auto& [name, f] : corpus::functors()) {
    Nerve N = nerve(f);
    ASSERT_FALSE(check_profunctor(N.body).has_value()) << name;
    for (int b = 0; b < f.cod->num_objects(); ++b) EXPECT_EQ(N.body.column(b), restrict(f, yoneda(f.cod, b))) << name;
  }
}

TEST(Nerve, LeftAdjointGivesRepresentables) {
  for (const auto& [name, l, r] : corpus::adjunctions()) {
    Nerve N = nerve(l);
    for (int b = 0; b < l.cod->num_objects(); ++b)
      EXPECT_TRUE(find_iso(N.body.column(b), yoneda(l.dom, r.obj[b])).has_value()) << name << " at " << b;
  }
}

TEST(YonedaAxioms, NerveExhibitsExtension) {
  for (const auto& [name, f] : corpus::functors()) {
    Nerve N = nerve(f);
    auto v = check_exhibits_extension(f, N.body, N.chi);
    EXPECT_FALSE(v.has_value()) << name << ": " << v->str();
    EXPECT_TRUE(is_nervous(f));
  }
}

TEST(YonedaAxioms, CorruptedUnitOnIdempotentIsCaught) {
  Cat idem = corpus::idempotent();
  FinFunctor id = identity_functor(idem);
  Nerve N = nerve(id);
  ASSERT_FALSE(check_exhibits_extension(id, N.body, N.chi).has_value());
  const int e = N.body.at(0, 0).elems[0] == "e" ? 0 : 1;
  auto v = check_exhibits_extension(id, N.body, {e});
  ASSERT_TRUE(v.has_value());
}

TEST(YonedaAxioms, OutOfRangeUnit) {
  Cat two = corpus::two();
  FinFunctor id = identity_functor(two);
  Nerve N = nerve(id);
  auto v = check_exhibits_extension(id, N.body, {0, 7});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, "UnitOutOfRange");
}

TEST(YonedaAxioms, AbsoluteLiftingOnCorpus) {
  std::vector<Cat> probes = {corpus::one(), corpus::two()};
  for (const auto& [name, f] : corpus::functors()) {
    auto r = absolute_lifting_check(f, probes);
    ASSERT_TRUE(r.ok()) << name << ": " << r.violation().str();
    EXPECT_GT(r.value(), 0);
  }
}

TEST(YonedaAxioms, AbsoluteLiftingPointProbeCounts) {
  // Over the point both sides are hom_B(f a, b); the pair count is |A| |B|.
  for (const auto& [name, f] : corpus::functors()) {
    auto r = absolute_lifting_check(f, {corpus::one()});
    ASSERT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.value(), f.dom->num_objects() * f.cod->num_objects()) << name;
  }
}

TEST(YonedaAxioms, AbsoluteLiftingRightAdjointsOverWalkingArrow) {
  for (const auto& [name, l, r] : corpus::adjunctions()) {
    auto res = absolute_lifting_check(r, {corpus::two()});
    EXPECT_TRUE(res.ok()) << name;
  }
}

TEST(YonedaAxioms, AbsoluteLiftingRejectsCorruptedUnit) {
  Cat idem = corpus::idempotent();
  FinFunctor id = identity_functor(idem);
  Nerve N = nerve(id);
  const int e = N.body.at(0, 0).elems[0] == "e" ? 0 : 1;
  EXPECT_FALSE(absolute_lifting_check(id, N.body, {e}, {corpus::one()}).ok());
}

TEST(YonedaAxioms, PastingOnComposablePairs) {
  auto fs = corpus::functors();
  int checked = 0;
  for (const auto& [nf, f] : fs)
    for (const auto& [ng, g] : fs) {
      if (!same_category(f.cod, g.dom)) continue;
      auto v = check_pasting_extension(f, g);
      EXPECT_FALSE(v.has_value()) << ng << " after " << nf << ": " << v->str();
      // The pasted nerve agrees with the nerve of the composite.
      Nerve Ngf = nerve(compose(g, f));
      Nerve Ng = nerve(g);
      for (int c = 0; c < g.cod->num_objects(); ++c)
        EXPECT_TRUE(find_iso(restrict(f, Ng.body.column(c)), Ngf.body.column(c)).has_value());
      ++checked;
    }
  EXPECT_GE(checked, 10);
}

// ----------------------------------------------------------- lattices

TEST(FormalKan, JoinFormula) {
  auto lats = corpus::lattices_up_to(4);
  Cat c3 = corpus::chain(3), two = corpus::two();
  std::vector<FinFunctor> gs = {thin_functor(c3, two, {0, 1, 1}), thin_functor(c3, two, {0, 0, 1}),
                                identity_functor(c3), thin_functor(c3, c3, {0, 0, 2})};
  for (const FinLattice& L : lats)
    for (const FinFunctor& g : gs)
      for (const FinFunctor& f : all_functors(g.dom, L.carrier)) {
        auto r = formal_kan_lemma(g, f);
        ASSERT_TRUE(r.ok()) << r.violation().str();
        for (int c = 0; c < g.cod->num_objects(); ++c)
          EXPECT_EQ(r.value().obj[c], lattice_join_of_below(L, f, g, c));
      }
}

TEST(FormalKan, AlongIdentity) {
  Cat dm = corpus::diamond();
  for (const FinFunctor& f : all_functors(corpus::chain(3), dm)) {
    auto r = formal_kan_lemma(identity_functor(f.dom), f);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.value().obj, f.obj);
  }
}

TEST(FormalKan, DiscreteCodomainIsNotCocomplete) {
  Cat d2 = corpus::discrete(2), one = corpus::one();
  try {
    formal_kan_lemma(identity_functor(one), make_functor(one, d2, {0}, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "NotCocomplete");
  }
}

TEST(Aft, Identity) {
  Cat c3 = corpus::chain(3);
  auto r = formal_aft(identity_functor(c3));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value().right.obj, (std::vector<int>{0, 1, 2}));
}

TEST(Aft, RoundDown) {
  Cat two = corpus::two(), c3 = corpus::chain(3);
  auto r = formal_aft(thin_functor(two, c3, {0, 2}));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value().right.obj, (std::vector<int>{0, 0, 1}));
}

TEST(Aft, NonJoinPreservingOnDiamond) {
  Cat dm = corpus::diamond();
  // bot, l, r ↦ bot and top ↦ top: l ∨ r = top is not preserved.
  auto r = formal_aft(thin_functor(dm, dm, {0, 0, 0, 3}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation().kind, "JoinNotPreserved");
  EXPECT_EQ(r.violation().witness, "l,r");
}

TEST(Aft, MatchesGaloisOracleUpToFour) {
  auto lats = corpus::lattices_up_to(4);
  int maps = 0;
  for (const FinLattice& L : lats)
    for (const FinLattice& M : lats)
      for (const FinFunctor& f : all_functors(L.carrier, M.carrier)) {
        auto r = formal_aft(f);
        auto oracle = galois_right_adjoint(f);
        ASSERT_EQ(r.ok(), oracle.has_value());
        if (oracle) EXPECT_EQ(r.value().right.obj, *oracle);
        ++maps;
      }
  EXPECT_GT(maps, 50);
}
