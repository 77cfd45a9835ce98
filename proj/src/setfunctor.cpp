#include "fcat/setfunctor.hpp"

#include <functional>

namespace fcat {

int SetFunctor::total_size() const {
  int n = 0;
  for (const auto& s : sets) n += s.size();
  return n;
}

bool operator==(const SetFunctor& a, const SetFunctor& b) {
  return same_category(a.shape, b.shape) && a.sets == b.sets && a.maps == b.maps;
}

Verdict check_set_functor(const SetFunctor& F) {
  const FinCat& C = *F.shape;
  if (static_cast<int>(F.sets.size()) != C.num_objects() || static_cast<int>(F.maps.size()) != C.num_arrows())
    return Violation{"ShapeMismatch", "functor table size"};
  for (int f = 0; f < C.num_arrows(); ++f) {
    const auto& m = F.maps[f];
    const int n = F.sets[C.src(f)].size(), k = F.sets[C.tgt(f)].size();
    if (static_cast<int>(m.size()) != n) return Violation{"MapNotTotal", C.arrow_name(f)};
    for (int v : m)
      if (v < 0 || v >= k) return Violation{"ImageOutsideCodomain", C.arrow_name(f)};
  }
  for (int x = 0; x < C.num_objects(); ++x) {
    const auto& m = F.maps[C.identity(x)];
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (m[i] != i) return Violation{"IdentityNotPreserved", C.object_name(x)};
  }
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f) {
      int h = C.compose(g, f);
      if (h < 0) continue;
      for (int i = 0; i < F.sets[C.src(f)].size(); ++i)
        if (F.maps[h][i] != F.maps[g][F.maps[f][i]])
          return Violation{"CompositionNotPreserved", C.arrow_name(g) + "," + C.arrow_name(f) + "@" +
                                                          F.sets[C.src(f)][i]};
    }
  return std::nullopt;
}

SetFunctor make_set_functor(Cat shape, std::vector<FinSet> sets, std::vector<std::vector<int>> maps) {
  SetFunctor F{std::move(shape), std::move(sets), std::move(maps)};
  if (auto v = check_set_functor(F)) throw Error(v->kind, v->witness);
  return F;
}

SetFunctor constant_set_functor(const Cat& shape, const FinSet& value) {
  SetFunctor F{shape, std::vector<FinSet>(shape->num_objects(), value), {}};
  std::vector<int> id(value.size());
  for (int i = 0; i < value.size(); ++i) id[i] = i;
  F.maps.assign(shape->num_arrows(), id);
  return F;
}

SetFunctor empty_set_functor(const Cat& shape) { return constant_set_functor(shape, FinSet{}); }

SetFunctor precompose(const SetFunctor& F, const FinFunctor& K) {
  if (!same_category(F.shape, K.cod)) throw Error("ShapeMismatch", "precompose");
  SetFunctor G{K.dom, {}, {}};
  for (int x : K.obj) G.sets.push_back(F.sets[x]);
  for (int f : K.arr) G.maps.push_back(F.maps[f]);
  return G;
}

SetFunctor reshape(const SetFunctor& F, const Cat& shape) {
  if (!same_category(F.shape, shape)) throw Error("ShapeMismatch", "reshape");
  return SetFunctor{shape, F.sets, F.maps};
}

Verdict check_nat_family(const SetFunctor& F, const SetFunctor& G, const NatFamily& a) {
  const FinCat& C = *F.shape;
  if (!same_category(F.shape, G.shape)) return Violation{"ShapeMismatch", "nat family"};
  if (static_cast<int>(a.comp.size()) != C.num_objects()) return Violation{"ShapeMismatch", "component count"};
  for (int x = 0; x < C.num_objects(); ++x) {
    if (static_cast<int>(a.comp[x].size()) != F.sets[x].size()) return Violation{"ComponentNotTotal", C.object_name(x)};
    for (int v : a.comp[x])
      if (v < 0 || v >= G.sets[x].size()) return Violation{"ComponentOutsideCodomain", C.object_name(x)};
  }
  for (int f = 0; f < C.num_arrows(); ++f) {
    int s = C.src(f), t = C.tgt(f);
    for (int i = 0; i < F.sets[s].size(); ++i)
      if (G.maps[f][a.comp[s][i]] != a.comp[t][F.maps[f][i]])
        return Violation{"NaturalityFails", C.arrow_name(f) + "@" + F.sets[s][i]};
  }
  return std::nullopt;
}

NatFamily identity_family(const SetFunctor& F) {
  NatFamily a;
  for (const auto& s : F.sets) {
    std::vector<int> id(s.size());
    for (int i = 0; i < s.size(); ++i) id[i] = i;
    a.comp.push_back(std::move(id));
  }
  return a;
}

NatFamily vcompose(const NatFamily& beta, const NatFamily& alpha) {
  NatFamily g;
  for (std::size_t x = 0; x < alpha.comp.size(); ++x) {
    std::vector<int> c;
    for (int v : alpha.comp[x]) c.push_back(beta.comp[x][v]);
    g.comp.push_back(std::move(c));
  }
  return g;
}

NatFamily whisker(const NatFamily& a, const FinFunctor& K) {
  NatFamily g;
  for (int x : K.obj) g.comp.push_back(a.comp[x]);
  return g;
}

bool is_iso_family(const NatFamily& a, const SetFunctor& G) {
  for (std::size_t x = 0; x < a.comp.size(); ++x)
    if (!is_bijection(a.comp[x], G.sets[x].size())) return false;
  return true;
}

Id nat_id(const SetFunctor& cod, const NatFamily& a) {
  std::string s = "[";
  for (std::size_t x = 0; x < a.comp.size(); ++x) {
    if (x) s += '|';
    for (std::size_t i = 0; i < a.comp[x].size(); ++i) {
      if (i) s += ',';
      s += cod.sets[x][a.comp[x][i]];
    }
  }
  return s + "]";
}

// ------------------------------------------------------------ profunctors

SetFunctor Profunctor::column(int b) const {
  SetFunctor F{op_cat(src), {}, {}};
  for (int a = 0; a < src->num_objects(); ++a) F.sets.push_back(at(a, b));
  for (int u = 0; u < src->num_arrows(); ++u) F.maps.push_back(body.maps[arrow(u, dst->identity(b))]);
  return F;
}

SetFunctor Profunctor::row(int a) const {
  SetFunctor F{dst, {}, {}};
  for (int b = 0; b < dst->num_objects(); ++b) F.sets.push_back(at(a, b));
  for (int v = 0; v < dst->num_arrows(); ++v) F.maps.push_back(body.maps[arrow(src->identity(a), v)]);
  return F;
}

NatFamily Profunctor::column_map(int v) const {
  NatFamily n;
  for (int a = 0; a < src->num_objects(); ++a) n.comp.push_back(body.maps[arrow(src->identity(a), v)]);
  return n;
}

Verdict check_profunctor(const Profunctor& P) {
  if (!same_category(P.body.shape, product_cat(op_cat(P.src), P.dst)))
    return Violation{"ShapeMismatch", "profunctor body"};
  return check_set_functor(P.body);
}

Profunctor profunctor_from_columns(const Cat& A, const Cat& B, const std::vector<SetFunctor>& columns,
                                   const std::vector<NatFamily>& maps) {
  Profunctor P{A, B, SetFunctor{product_cat(op_cat(A), B), {}, {}}};
  for (int a = 0; a < A->num_objects(); ++a)
    for (int b = 0; b < B->num_objects(); ++b) P.body.sets.push_back(columns[b].sets[a]);
  for (int u = 0; u < A->num_arrows(); ++u)
    for (int v = 0; v < B->num_arrows(); ++v) {
      const SetFunctor& col = columns[B->src(v)];
      std::vector<int> m;
      for (int x = 0; x < col.sets[A->tgt(u)].size(); ++x) m.push_back(maps[v].comp[A->src(u)][col.maps[u][x]]);
      P.body.maps.push_back(std::move(m));
    }
  if (auto v = check_set_functor(P.body)) throw Error(v->kind, v->witness);
  return P;
}

Limit limit_of_diagram(const SetFunctor& D) {
  const FinCat& J = *D.shape;
  const int n = J.num_objects();
  Limit L;
  std::vector<int> cur(n, -1);
  // Arrows grouped by the later of their two endpoints, so each is checked
  // exactly when both ends are assigned.
  std::vector<std::vector<int>> due(n);
  for (int f = 0; f < J.num_arrows(); ++f) due[std::max(J.src(f), J.tgt(f))].push_back(f);
  std::function<void(int)> go = [&](int j) {
    if (j == n) {
      L.families.push_back(cur);
      return;
    }
    for (int x = 0; x < D.sets[j].size(); ++x) {
      cur[j] = x;
      bool ok = true;
      for (int f : due[j])
        if (D.maps[f][cur[J.src(f)]] != cur[J.tgt(f)]) {
          ok = false;
          break;
        }
      if (ok) go(j + 1);
    }
    cur[j] = -1;
  };
  go(0);
  for (const auto& fam : L.families) {
    std::vector<Id> parts;
    for (int j = 0; j < n; ++j) parts.push_back(D.sets[j][fam[j]]);
    L.apex.elems.push_back(tuple_id(parts));
  }
  return L;
}

Colimit colimit_of_parts(const std::vector<FinSet>& parts, const std::vector<Id>& tags,
                         const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& relations) {
  Colimit c;
  FinSet carrier;
  c.injection.resize(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (int x = 0; x < parts[j].size(); ++x) {
      c.injection[j].push_back(carrier.size());
      c.origin.emplace_back(static_cast<int>(j), x);
      carrier.elems.push_back(tagged_id(parts[j][x], tags[j]));
    }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations)
    pairs.emplace_back(c.injection[a.first][a.second], c.injection[b.first][b.second]);
  c.quotient = coequalize_indices(std::move(carrier), pairs);
  const int n = c.quotient.carrier.size();
  c.class_number.assign(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (c.quotient.class_of[i] == i) {
      c.class_number[i] = k++;
      c.classes.elems.push_back(c.quotient.carrier[i]);
    }
  for (int i = 0; i < n; ++i) c.class_number[i] = c.class_number[c.quotient.class_of[i]];
  return c;
}

Colimit colimit_of_diagram(const SetFunctor& D) {
  const FinCat& J = *D.shape;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
  for (int f = 0; f < J.num_arrows(); ++f) {
    if (J.is_identity(f)) continue;
    for (int x = 0; x < D.sets[J.src(f)].size(); ++x)
      rel.push_back({{J.src(f), x}, {J.tgt(f), D.maps[f][x]}});
  }
  return colimit_of_parts(D.sets, J.tables().objects, rel);
}

}  // namespace fcat
