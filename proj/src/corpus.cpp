#include "fcat/corpus.hpp"

#include <algorithm>
#include <functional>

#include "fcat/presheaf.hpp"

namespace fcat::corpus {

namespace {

using A = RawCategory::Arrow;
using C = RawCategory::Composite;

}  // namespace

Cat one() { return validate_with_identities({{"x"}, {}, {}, {}}); }

Cat two() {
  return validate_with_identities(
      {{"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"u", "0", "1"}}, {{"0", "id0"}, {"1", "id1"}}, {}});
}

Cat discrete(int n) {
  std::vector<Id> objs;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  return discrete_cat(objs);
}

Cat chain(int n) {
  std::vector<Id> objs;
  std::vector<std::pair<Id, Id>> less;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) less.emplace_back(objs[i], objs[i + 1]);
  return poset_cat(objs, less);
}

Cat span() { return validate_with_identities({{"c", "l", "r"}, {A{"p", "c", "l"}, A{"q", "c", "r"}}, {}, {}}); }

Cat parallel_pair() {
  return validate_with_identities({{"0", "1"}, {A{"s", "0", "1"}, A{"t", "0", "1"}}, {}, {}});
}

Cat idempotent() {
  return validate_with_identities({{"*"}, {A{"id", "*", "*"}, A{"e", "*", "*"}}, {{"*", "id"}}, {C{"e", "e", "e"}}});
}

Cat z2() {
  return validate_with_identities({{"*"}, {A{"id", "*", "*"}, A{"s", "*", "*"}}, {{"*", "id"}}, {C{"s", "s", "id"}}});
}

Cat diamond() {
  return poset_cat({"bot", "l", "r", "top"}, {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}});
}

std::vector<NamedCat> categories() {
  return {{"One", one()},       {"Two", two()},   {"Disc2", discrete(2)}, {"C3", chain(3)},
          {"Span", span()},     {"ParallelPair", parallel_pair()},        {"Idem", idempotent()},
          {"Z2", z2()},         {"Diamond", diamond()}};
}

SetFunctor coproduct(const SetFunctor& F, const SetFunctor& G) {
  if (!same_category(F.shape, G.shape)) throw Error("ShapeMismatch", "coproduct");
  SetFunctor S{F.shape, {}, {}};
  for (std::size_t x = 0; x < F.sets.size(); ++x) {
    FinSet s;
    for (const auto& e : F.sets[x].elems) s.elems.push_back(tagged_id(e, "0"));
    for (const auto& e : G.sets[x].elems) s.elems.push_back(tagged_id(e, "1"));
    S.sets.push_back(std::move(s));
  }
  const FinCat& sh = *F.shape;
  for (int f = 0; f < sh.num_arrows(); ++f) {
    std::vector<int> m = F.maps[f];
    const int off = F.sets[sh.tgt(f)].size();
    for (int v : G.maps[f]) m.push_back(v + off);
    S.maps.push_back(std::move(m));
  }
  return S;
}

SetFunctor random_set_functor(const Cat& shape, std::mt19937_64& rng, int max_size, int min_size) {
  const FinCat& Cc = *shape;
  const int n = Cc.num_objects(), m = Cc.num_arrows();
  std::vector<int> order;
  for (int f = 0; f < m; ++f)
    if (!Cc.is_identity(f)) order.push_back(f);
  for (int attempt = 0;; ++attempt) {
    std::uniform_int_distribution<int> size_dist(min_size, max_size);
    std::vector<int> sizes(n);
    for (int& s : sizes) s = size_dist(rng);
    SetFunctor F{shape, {}, std::vector<std::vector<int>>(m)};
    for (int x = 0; x < n; ++x) {
      FinSet s;
      for (int i = 0; i < sizes[x]; ++i) s.elems.push_back(std::string(1, static_cast<char>('a' + i)));
      F.sets.push_back(std::move(s));
      std::vector<int> id(sizes[x]);
      for (int i = 0; i < sizes[x]; ++i) id[i] = i;
      F.maps[Cc.identity(x)] = id;
    }
    std::vector<char> assigned(m, 0);
    for (int x = 0; x < n; ++x) assigned[Cc.identity(x)] = 1;
    long budget = 20000;
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
      if (k == order.size()) return true;
      const int f = order[k];
      auto choices = all_functions(sizes[Cc.src(f)], sizes[Cc.tgt(f)]);
      std::shuffle(choices.begin(), choices.end(), rng);
      for (auto& c : choices) {
        if (--budget < 0) return false;
        F.maps[f] = c;
        assigned[f] = 1;
        bool ok = true;
        for (int g = 0; g < m && ok; ++g)
          for (int h = 0; h < m && ok; ++h) {
            if (!assigned[g] || !assigned[h]) continue;
            const int gh = Cc.compose(g, h);
            if (gh < 0 || !assigned[gh] || (g != f && h != f && gh != f)) continue;
            for (int i = 0; i < sizes[Cc.src(h)] && ok; ++i) ok = F.maps[gh][i] == F.maps[g][F.maps[h][i]];
          }
        if (ok && go(k + 1)) return true;
        assigned[f] = 0;
      }
      return false;
    };
    if (go(0)) return F;
    if (attempt > 200) throw Error("NoRandomFunctor", "gave up");
  }
}

Profunctor random_profunctor(const Cat& A, const Cat& B, std::mt19937_64& rng, int max_size) {
  return Profunctor{A, B, random_set_functor(product_cat(op_cat(A), B), rng, max_size)};
}

std::vector<NamedSetFunctor> presheaves(const Cat& A, std::uint64_t seed, int random_count, int max_size) {
  std::vector<NamedSetFunctor> out;
  const Cat opA = op_cat(A);
  for (int a = 0; a < A->num_objects(); ++a) out.push_back({"y(" + A->object_name(a) + ")", yoneda(A, a)});
  out.push_back({"empty", empty_set_functor(opA)});
  out.push_back({"terminal", constant_set_functor(opA, FinSet{{"pt"}})});
  const int last = A->num_objects() - 1;
  out.push_back({"y(" + A->object_name(0) + ")+y(" + A->object_name(last) + ")",
                 reshape(coproduct(yoneda(A, 0), yoneda(A, last)), opA)});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i)
    out.push_back({"rand" + std::to_string(i), random_set_functor(opA, rng, max_size)});
  return out;
}

std::vector<NamedFunctor> functors() {
  const Cat One = one(), Two = two(), C3 = chain(3), D2 = discrete(2), Sp = span(), PP = parallel_pair(),
            Id = idempotent(), Z = z2(), Dm = diamond();
  std::vector<NamedFunctor> out;
  out.push_back({"const_0", make_functor(One, Two, {0}, {0})});
  out.push_back({"const_1", make_functor(One, Two, {1}, {1})});
  out.push_back({"bang_Two", make_functor(Two, One, {0, 0}, {0, 0, 0})});
  out.push_back({"id_Two", identity_functor(Two)});
  out.push_back({"incl_Two_C3", thin_functor(Two, C3, {0, 2})});
  out.push_back({"incl_Disc2_Two", make_functor(D2, Two, {0, 1}, {0, 1})});
  out.push_back({"collapse_Span", make_functor(Sp, Two, {0, 1, 1}, {2, 2, 0, 1, 1})});
  out.push_back({"collapse_PP", make_functor(PP, Two, {0, 1}, {2, 2, 0, 1})});
  out.push_back({"bang_Idem", make_functor(Id, One, {0}, {0, 0})});
  out.push_back({"unit_Idem", make_functor(One, Id, {0}, {0})});
  out.push_back({"bang_Z2", make_functor(Z, One, {0}, {0, 0})});
  out.push_back({"rank_Diamond", thin_functor(Dm, C3, {0, 1, 1, 2})});
  return out;
}

std::vector<NamedAdjunction> adjunctions() {
  const Cat One = one(), Two = two(), C3 = chain(3);
  std::vector<NamedAdjunction> out;
  out.push_back({"id_Two", identity_functor(Two), identity_functor(Two)});
  out.push_back({"bang_top", make_functor(Two, One, {0, 0}, {0, 0, 0}), make_functor(One, Two, {1}, {1})});
  out.push_back({"bottom_bang", make_functor(One, Two, {0}, {0}), make_functor(Two, One, {0, 0}, {0, 0, 0})});
  out.push_back({"incl_rounddown", thin_functor(Two, C3, {0, 2}), thin_functor(C3, Two, {0, 0, 1})});
  out.push_back({"roundup_incl", thin_functor(C3, Two, {0, 1, 1}), thin_functor(Two, C3, {0, 2})});
  return out;
}

std::vector<FinLattice> lattices_up_to(int n) {
  std::vector<FinLattice> found;
  std::vector<Cat> cats;
  for (int k = 1; k <= n; ++k) {
    std::vector<Id> objs;
    for (int i = 0; i < k; ++i) objs.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
      std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1) rel[pairs[p].first][pairs[p].second] = 1;
      bool closed = true;
      for (int i = 0; i < k && closed; ++i)
        for (int j = 0; j < k && closed; ++j)
          for (int l = 0; l < k && closed; ++l)
            if (rel[i][j] && rel[j][l] && !rel[i][l]) closed = false;
      if (!closed) continue;
      // A lattice has a bottom: object 0 must lie below everything.
      bool has_bottom = true;
      for (int j = 1; j < k; ++j) has_bottom = has_bottom && rel[0][j];
      if (!has_bottom) continue;
      std::vector<std::pair<Id, Id>> less;
      for (auto [i, j] : pairs)
        if (rel[i][j]) less.emplace_back(objs[i], objs[j]);
      Cat c = poset_cat(objs, less);
      FinLattice L;
      try {
        L = lattice_from_poset(c);
      } catch (const Error&) {
        continue;
      }
      bool fresh = true;
      for (const Cat& d : cats)
        if (d->num_objects() == k && d->num_arrows() == c->num_arrows() && find_isomorphism(c, d)) {
          fresh = false;
          break;
        }
      if (!fresh) continue;
      cats.push_back(c);
      found.push_back(L);
    }
  }
  return found;
}

}  // namespace fcat::corpus
