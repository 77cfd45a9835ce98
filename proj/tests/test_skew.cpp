#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "fcat/corpus.hpp"
#include "fcat/exec.hpp"
#include "fcat/presheaf.hpp"
#include "fcat/skew.hpp"

using namespace fcat;

namespace {

// Brute-force (J₁F)(S): every raw triple (x, h, a) with h listed explicitly,
// merged by a plain union-find under (x1, h J(u), a) ~ (x2, h, F(u) a).
struct BruteExtension {
  std::map<std::tuple<int, std::vector<int>, int>, int> index;
  std::vector<int> parent;

  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  int id(int x, const std::vector<int>& h, int a) { return index.at({x, h, a}); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) n += find(i) == i;
    return n;
  }
};

void tables(int len, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < n; ++v) {
    cur.push_back(v);
    tables(len, n, cur, out);
    cur.pop_back();
  }
}

BruteExtension brute(const SkewContext& ctx, const SetFunctor& F, int s) {
  const FinCat& X = *ctx.X;
  BruteExtension b;
  std::vector<std::vector<std::vector<int>>> hs(X.num_objects());
  for (int x = 0; x < X.num_objects(); ++x) {
    std::vector<int> cur;
    tables(ctx.J.sets[x].size(), s, cur, hs[x]);
    for (const auto& h : hs[x])
      for (int a = 0; a < F.sets[x].size(); ++a) {
        const int k = static_cast<int>(b.parent.size());
        b.index[{x, h, a}] = k;
        b.parent.push_back(k);
      }
  }
  for (int u = 0; u < X.num_arrows(); ++u) {
    const int x1 = X.src(u), x2 = X.tgt(u);
    for (const auto& h : hs[x2]) {
      std::vector<int> hj;
      for (int j : ctx.J.maps[u]) hj.push_back(h[j]);
      for (int a = 0; a < F.sets[x1].size(); ++a)
        b.parent[b.find(b.id(x1, hj, a))] = b.find(b.id(x2, h, F.maps[u][a]));
    }
  }
  return b;
}

std::vector<SetFunctor> sample_functors(const SkewInstance& inst) {
  std::vector<SetFunctor> out;
  for (const auto& s : inst.samples) out.push_back(s.functor);
  return out;
}

const SkewInstance& instance(const std::vector<SkewInstance>& all, const std::string& name) {
  for (const auto& i : all)
    if (i.name == name) return i;
  throw std::runtime_error("no instance " + name);
}

}  // namespace

TEST(Extension, MatchesUnionFind) {
  std::mt19937_64 rng(5);
  const FinSetFragment frag = finset_fragment({0, 1, 2});
  std::vector<SkewContext> ctxs{make_skew_context(frag.X, frag.J)};
  for (const auto& inst : skew_corpus(3)) ctxs.push_back(inst.ctx);
  for (const auto& ctx : ctxs)
    for (int trial = 0; trial < 4; ++trial) {
      const SetFunctor F = corpus::random_set_functor(ctx.X, rng, 2);
      for (int s = 0; s <= 3; ++s) {
        const JExtension E = extend_at(ctx, F, probe_set(s));
        BruteExtension b = brute(ctx, F, s);
        ASSERT_EQ(E.size(), b.classes());
        // Same partition: classes agree iff the brute roots agree.
        std::map<int, int> root_to_class;
        for (const auto& [key, k] : b.index) {
          const auto& [x, h, a] = key;
          const int c = E.cls(x, h, a);
          auto [it, fresh] = root_to_class.emplace(b.find(k), c);
          ASSERT_EQ(it->second, c);
        }
        for (int k = 0; k < E.size(); ++k) {
          const auto w = E.witness(k);
          EXPECT_EQ(E.cls(w.x, w.h, w.a), k);
        }
      }
    }
}

TEST(Extension, SingletonRootOnPoint) {
  // X = 1, J = {*}: (F ◁ G)(*) = G × F.
  const Cat one = corpus::one();
  SkewContext ctx = make_skew_context(one, constant_set_functor(one, FinSet{{"*"}}));
  const SetFunctor F = constant_set_functor(one, FinSet{{"a", "b", "c"}});
  const SetFunctor G = constant_set_functor(one, FinSet{{"p", "q"}});
  const SkewProduct P = skew_prod(ctx, F, G);
  EXPECT_EQ(P.value.sets[0].size(), 6);
  EXPECT_EQ(P.value.sets[0].elems[0], "([0],a)@x");
}

TEST(Extension, TwoElementRootOnPoint) {
  // X = 1, J = {a, b}: (F ◁ G)(*) = G² × F.
  const Cat one = corpus::one();
  SkewContext ctx = make_skew_context(one, constant_set_functor(one, FinSet{{"a", "b"}}));
  for (int f = 0; f <= 3; ++f)
    for (int g = 0; g <= 3; ++g) {
      const SkewProduct P = skew_prod(ctx, constant_set_functor(one, probe_set(f)), constant_set_functor(one, probe_set(g)));
      EXPECT_EQ(P.value.sets[0].size(), g * g * f);
    }
}

TEST(Extension, RootOnItselfIsDenseOnFragment) {
  const FinSetFragment frag = finset_fragment({1, 2});
  SkewContext ctx = make_skew_context(frag.X, frag.J, 3);
  for (const auto& S : ctx.probes) {
    const JExtension E = extend_at(ctx, frag.J, S);
    EXPECT_EQ(E.size(), S.size());
  }
  const SkewProduct JJ = skew_prod(ctx, frag.J, frag.J);
  for (int x = 0; x < frag.X->num_objects(); ++x) EXPECT_EQ(JJ.value.sets[x].size(), frag.J.sets[x].size());
}

TEST(Extension, InvalidRootThrows) {
  const Cat two = corpus::two();
  SetFunctor bad = constant_set_functor(two, FinSet{{"a"}});
  bad.maps[0] = {3};
  EXPECT_THROW(make_skew_context(two, bad), Error);
  EXPECT_THROW(make_skew_context(corpus::one(), constant_set_functor(two, FinSet{{"a"}})), Error);
}

TEST(Product, IsAFunctorOnCorpus) {
  for (const auto& inst : skew_corpus(2)) {
    const auto S = sample_functors(inst);
    for (const auto& F : S)
      for (const auto& G : S) EXPECT_FALSE(check_set_functor(skew_prod(inst.ctx, F, G).value)) << inst.name;
  }
}

TEST(Product, SerialMatchesParallel) {
  const auto all = skew_corpus(4);
  const SkewInstance& inst = instance(all, "fragment-1-2");
  const auto S = sample_functors(inst);
  set_default_exec(Exec::serial);
  const SkewProduct a = skew_prod(inst.ctx, S[1], S[2]);
  set_default_exec(Exec::parallel);
  const SkewProduct b = skew_prod(inst.ctx, S[1], S[2]);
  EXPECT_EQ(a.value.sets, b.value.sets);
  EXPECT_EQ(a.value.maps, b.value.maps);
}

TEST(Product, WhiskersAreNaturalAndCommute) {
  // (A'◁β)(α◁B) = (α◁B')(A◁β) for α: A → A', β: B → B'.
  std::mt19937_64 rng(9);
  for (const auto& inst : skew_corpus(6)) {
    const SkewContext& ctx = inst.ctx;
    int squares = 0;
    for (int trial = 0; trial < 6 && squares < 3; ++trial) {
      const SetFunctor A = corpus::random_set_functor(ctx.X, rng, 2);
      const SetFunctor A2 = corpus::random_set_functor(ctx.X, rng, 2);
      const SetFunctor B = corpus::random_set_functor(ctx.X, rng, 2);
      const SetFunctor B2 = corpus::random_set_functor(ctx.X, rng, 2);
      const auto alphas = nat_hom(A, A2), betas = nat_hom(B, B2);
      if (alphas.empty() || betas.empty()) continue;
      const NatFamily& alpha = alphas[rng() % alphas.size()];
      const NatFamily& beta = betas[rng() % betas.size()];
      const SkewProduct AB = skew_prod(ctx, A, B), A2B = skew_prod(ctx, A2, B);
      const SkewProduct AB2 = skew_prod(ctx, A, B2), A2B2 = skew_prod(ctx, A2, B2);
      const NatFamily left = vcompose(whisker_second(A2B, A2B2, beta), whisker_first(AB, A2B, alpha));
      const NatFamily right = vcompose(whisker_first(AB2, A2B2, alpha), whisker_second(AB, AB2, beta));
      EXPECT_EQ(left.comp, right.comp) << inst.name;
      EXPECT_FALSE(check_nat_family(AB.value, A2B2.value, left)) << inst.name;
      ++squares;
    }
  }
}

TEST(Coherence, HoldsOnCorpus) {
  for (const auto& inst : skew_corpus(1)) {
    const auto S = sample_functors(inst);
    auto r = check_coherence(inst.ctx, S[1], S[2], S[3], S[0]);
    ASSERT_TRUE(r.ok()) << inst.name << ": " << r.violation().str();
    for (int n : r.value().checked) EXPECT_GT(n, 0) << inst.name;
    EXPECT_EQ(r.value().probe_sizes, (std::vector<int>{0, 1, 2}));
  }
}

TEST(Coherence, HoldsOnRandomQuadruples) {
  std::mt19937_64 rng(17);
  for (const auto& inst : skew_corpus(2))
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<SetFunctor> q;
      for (int i = 0; i < 4; ++i) q.push_back(corpus::random_set_functor(inst.ctx.X, rng, 2));
      auto r = check_coherence(inst.ctx, q[0], q[1], q[2], q[3]);
      EXPECT_TRUE(r.ok()) << inst.name << ": " << r.violation().str();
    }
}

TEST(Coherence, MutationsAreCaught) {
  const auto all = skew_corpus(1);
  for (SkewMutation m : {SkewMutation::gamma_swap, SkewMutation::gamma_shift, SkewMutation::lambda_shift,
                         SkewMutation::rho_shift}) {
    bool caught = false;
    for (const auto& inst : all) {
      SkewContext ctx = inst.ctx;
      ctx.mutation = m;
      const auto S = sample_functors(inst);
      auto r = check_coherence(ctx, S[1], S[2], S[3], S[0]);
      if (!r.ok()) {
        EXPECT_EQ(r.violation().kind, "DiagramFails");
        EXPECT_EQ(r.violation().witness.rfind("skm", 0), 0u);
        caught = true;
      }
    }
    EXPECT_TRUE(caught) << static_cast<int>(m);
  }
}

TEST(Normality, MatchesRootProperties) {
  const auto all = skew_corpus(1);
  std::map<std::string, std::pair<bool, bool>> expect{
      {"point-1", {true, true}},    {"point-2", {false, false}},     {"fragment-1-2", {true, true}},
      {"arrow", {false, false}},    {"discrete-2", {false, false}},
  };
  for (const auto& inst : all) {
    const NormalityReport r = normality_report(inst.ctx, sample_functors(inst));
    EXPECT_TRUE(r.consistent()) << inst.name;
    EXPECT_EQ(r.fully_faithful, expect.at(inst.name).first) << inst.name;
    EXPECT_EQ(r.dense, expect.at(inst.name).second) << inst.name;
    if (!r.rho_invertible) EXPECT_FALSE(r.rho_witness.empty());
    if (!r.lambda_invertible) EXPECT_FALSE(r.lambda_witness.empty());
  }
}

TEST(Normality, PointWithTwoElementRoot) {
  const auto all = skew_corpus(1);
  const NormalityReport r = normality_report(instance(all, "point-2").ctx, sample_functors(instance(all, "point-2")));
  EXPECT_FALSE(r.rho_invertible);
  EXPECT_FALSE(r.lambda_invertible);
  EXPECT_EQ(r.lambda_witness, "const 1");  // Set(2, ∅) × 2 = ∅ is still a bijection
}

TEST(Normality, FragmentIsNormal) {
  const auto all = skew_corpus(1);
  const NormalityReport r =
      normality_report(instance(all, "fragment-1-2").ctx, sample_functors(instance(all, "fragment-1-2")));
  EXPECT_TRUE(r.rho_invertible);
  EXPECT_TRUE(r.lambda_invertible);
  EXPECT_TRUE(r.gamma_invertible);
}

TEST(Mates, RoundTripOnCorpus) {
  for (const auto& inst : skew_corpus(1)) {
    const auto S = sample_functors(inst);
    for (std::size_t i = 1; i < S.size(); ++i) {
      const SetFunctor& U = S[i];
      const SetFunctor& W = S[(i % (S.size() - 1)) + 1];
      auto r = mate_roundtrip(inst.ctx, U, W);
      ASSERT_TRUE(r.ok()) << inst.name << ": " << r.violation().str();
      EXPECT_EQ(r.value(), static_cast<int>(nat_hom(U, skew_prod(inst.ctx, W, inst.ctx.J).value).size()));
    }
  }
}

TEST(Fragment, IsFullSubcategoryOfFinSet) {
  const FinSetFragment frag = finset_fragment({0, 1, 2});
  const FinCat& X = *frag.X;
  ASSERT_EQ(X.num_objects(), 3);
  // |Set(m, n)| = n^m.
  const int sizes[] = {0, 1, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int expected = 1;
      for (int k = 0; k < sizes[i]; ++k) expected *= sizes[j];
      EXPECT_EQ(static_cast<int>(X.hom(i, j).size()), expected);
    }
  EXPECT_FALSE(check_set_functor(frag.J));
}
