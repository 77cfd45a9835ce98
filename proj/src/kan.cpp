#include "fcat/kan.hpp"

#include <functional>
#include <tuple>
#include <map>
#include <unordered_map>

#include "fcat/presheaf.hpp"

namespace fcat {

int CommaCat::find(int a, int h) const { return index_[a * stride_ + h]; }

namespace {

struct ArrowKey {
  int g, p, q;
  bool operator<(const ArrowKey& o) const { return std::tie(g, p, q) < std::tie(o.g, o.p, o.q); }
};

// Composition table of a category whose arrows are triples (g, p, q), with
// g an arrow of `base` and g2∘g1 computed in `base`.
void fill_triples(CatTables& t, const FinCat& base, const std::vector<ArrowKey>& arrows) {
  std::map<ArrowKey, int> index;
  for (std::size_t i = 0; i < arrows.size(); ++i) index.emplace(arrows[i], static_cast<int>(i));
  const int m = static_cast<int>(arrows.size());
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  std::vector<std::vector<int>> from(t.objects.size());
  for (int e = 0; e < m; ++e) from[arrows[e].p].push_back(e);
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 : from[arrows[e1].q]) {
      ArrowKey k{base.compose(arrows[e2].g, arrows[e1].g), arrows[e1].p, arrows[e2].q};
      t.compose[static_cast<std::size_t>(e2) * m + e1] = index.at(k);
    }
  t.identity.assign(t.objects.size(), -1);
  for (int e = 0; e < m; ++e)
    if (arrows[e].p == arrows[e].q && base.is_identity(arrows[e].g)) t.identity[arrows[e].p] = e;
}

}  // namespace

CommaCat comma(const FinFunctor& K, int b) {
  const FinCat& A = *K.dom;
  const FinCat& B = *K.cod;
  if (b < 0 || b >= B.num_objects()) throw Error("UnknownObject", std::to_string(b));
  CommaCat c;
  c.stride_ = B.num_arrows();
  c.index_.assign(static_cast<std::size_t>(A.num_objects()) * c.stride_, -1);
  CatTables t;
  std::vector<int> obj_a;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int h : B.hom(K.obj[a], b)) {
      c.index_[a * c.stride_ + h] = static_cast<int>(t.objects.size());
      t.objects.push_back(tuple_id({A.object_name(a), B.arrow_name(h)}));
      obj_a.push_back(a);
      c.arrow.push_back(h);
    }
  std::vector<ArrowKey> arrows;
  for (int p = 0; p < static_cast<int>(obj_a.size()); ++p)
    for (int g = 0; g < A.num_arrows(); ++g) {
      if (A.src(g) != obj_a[p]) continue;
      int a2 = A.tgt(g);
      for (int h2 : B.hom(K.obj[a2], b))
        if (B.compose(h2, K.arr[g]) == c.arrow[p]) {
          int q = c.index_[a2 * c.stride_ + h2];
          arrows.push_back({g, p, q});
          t.arrows.push_back(tuple_id({A.arrow_name(g), B.arrow_name(c.arrow[p]), B.arrow_name(h2)}));
          t.src.push_back(p);
          t.tgt.push_back(q);
        }
    }
  fill_triples(t, A, arrows);
  c.cat = FinCat::trusted(std::move(t));
  c.projection = FinFunctor{c.cat, K.dom, obj_a, {}};
  for (const auto& e : arrows) c.projection.arr.push_back(e.g);
  return c;
}

CommaCat coslice(const FinFunctor& K, int b) {
  const FinCat& A = *K.dom;
  const FinCat& B = *K.cod;
  if (b < 0 || b >= B.num_objects()) throw Error("UnknownObject", std::to_string(b));
  CommaCat c;
  c.stride_ = B.num_arrows();
  c.index_.assign(static_cast<std::size_t>(A.num_objects()) * c.stride_, -1);
  CatTables t;
  std::vector<int> obj_a;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int h : B.hom(b, K.obj[a])) {
      c.index_[a * c.stride_ + h] = static_cast<int>(t.objects.size());
      t.objects.push_back(tuple_id({A.object_name(a), B.arrow_name(h)}));
      obj_a.push_back(a);
      c.arrow.push_back(h);
    }
  std::vector<ArrowKey> arrows;
  for (int p = 0; p < static_cast<int>(obj_a.size()); ++p)
    for (int g = 0; g < A.num_arrows(); ++g) {
      if (A.src(g) != obj_a[p]) continue;
      int h2 = B.compose(K.arr[g], c.arrow[p]);
      int q = c.index_[A.tgt(g) * c.stride_ + h2];
      arrows.push_back({g, p, q});
      t.arrows.push_back(tuple_id({A.arrow_name(g), B.arrow_name(c.arrow[p])}));
      t.src.push_back(p);
      t.tgt.push_back(q);
    }
  fill_triples(t, A, arrows);
  c.cat = FinCat::trusted(std::move(t));
  c.projection = FinFunctor{c.cat, K.dom, obj_a, {}};
  for (const auto& e : arrows) c.projection.arr.push_back(e.g);
  return c;
}

ExtensionResult lan_set(const FinFunctor& K, const SetFunctor& F) {
  if (!same_category(F.shape, K.dom)) throw Error("ShapeMismatch", "lan_set");
  const FinCat& A = *K.dom;
  const FinCat& B = *K.cod;
  ExtensionResult E;
  E.extension.shape = K.cod;
  for (int b = 0; b < B.num_objects(); ++b) {
    E.commas.push_back(comma(K, b));
    E.colimits.push_back(colimit_of_diagram(precompose(F, E.commas.back().projection)));
    E.extension.sets.push_back(E.colimits.back().classes);
  }
  for (int k = 0; k < B.num_arrows(); ++k) {
    const int b = B.src(k), b2 = B.tgt(k);
    const Colimit& col = E.colimits[b];
    std::vector<int> m;
    for (int r : col.representatives()) {
      auto [j, x] = col.origin[r];
      int a = E.commas[b].projection.obj[j];
      int j2 = E.commas[b2].find(a, B.compose(k, E.commas[b].arrow[j]));
      m.push_back(E.colimits[b2].cls(j2, x));
    }
    E.extension.maps.push_back(std::move(m));
  }
  for (int a = 0; a < A.num_objects(); ++a) {
    const int b = K.obj[a];
    const int j = E.commas[b].find(a, B.identity(b));
    std::vector<int> c;
    for (int x = 0; x < F.sets[a].size(); ++x) c.push_back(E.colimits[b].cls(j, x));
    E.unit.comp.push_back(std::move(c));
  }
  return E;
}

ExtensionResult ran_set(const FinFunctor& K, const SetFunctor& F) {
  if (!same_category(F.shape, K.dom)) throw Error("ShapeMismatch", "ran_set");
  const FinCat& A = *K.dom;
  const FinCat& B = *K.cod;
  ExtensionResult E;
  E.extension.shape = K.cod;
  std::vector<std::map<std::vector<int>, int>> lookup(B.num_objects());
  for (int b = 0; b < B.num_objects(); ++b) {
    E.commas.push_back(coslice(K, b));
    E.limits.push_back(limit_of_diagram(precompose(F, E.commas.back().projection)));
    E.extension.sets.push_back(E.limits.back().apex);
    const auto& fams = E.limits.back().families;
    for (std::size_t e = 0; e < fams.size(); ++e) lookup[b].emplace(fams[e], static_cast<int>(e));
  }
  for (int k = 0; k < B.num_arrows(); ++k) {
    const int b = B.src(k), b2 = B.tgt(k);
    const CommaCat& to = E.commas[b2];
    std::vector<int> m;
    for (const auto& fam : E.limits[b].families) {
      std::vector<int> moved;
      for (int q = 0; q < to.cat->num_objects(); ++q)
        moved.push_back(fam[E.commas[b].find(to.projection.obj[q], B.compose(to.arrow[q], k))]);
      m.push_back(lookup[b2].at(moved));
    }
    E.extension.maps.push_back(std::move(m));
  }
  for (int a = 0; a < A.num_objects(); ++a) {
    const int b = K.obj[a];
    const int j = E.commas[b].find(a, B.identity(b));
    std::vector<int> c;
    for (const auto& fam : E.limits[b].families) c.push_back(fam[j]);
    E.unit.comp.push_back(std::move(c));
  }
  return E;
}

namespace {

Verdict check_bijection(const std::vector<NatFamily>& left, const std::vector<NatFamily>& right,
                        const std::function<NatFamily(const NatFamily&)>& forward) {
  std::vector<int> hit(right.size(), -1);
  for (std::size_t i = 0; i < left.size(); ++i) {
    int j = index_of(right, forward(left[i]));
    if (j < 0) return Violation{"BijectionFails", "image of #" + std::to_string(i) + " is not natural"};
    if (hit[j] >= 0)
      return Violation{"BijectionFails", "#" + std::to_string(hit[j]) + " and #" + std::to_string(i) + " collide"};
    hit[j] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < right.size(); ++j)
    if (hit[j] < 0) return Violation{"BijectionFails", "target #" + std::to_string(j) + " not reached"};
  return std::nullopt;
}

}  // namespace

Verdict check_lan_universal(const ExtensionResult& E, const FinFunctor& K, const SetFunctor& F,
                            const SetFunctor& G) {
  const SetFunctor GK = precompose(G, K);
  return check_bijection(nat_hom(E.extension, G), nat_hom(F, GK),
                         [&](const NatFamily& a) { return vcompose(whisker(a, K), E.unit); });
}

Verdict check_ran_universal(const ExtensionResult& E, const FinFunctor& K, const SetFunctor& F,
                            const SetFunctor& G) {
  const SetFunctor GK = precompose(G, K);
  return check_bijection(nat_hom(G, E.extension), nat_hom(GK, F),
                         [&](const NatFamily& a) { return vcompose(E.unit, whisker(a, K)); });
}

// ------------------------------------------------------------ co/ends

Colimit coend(const Cat& A, const SetFunctor& F) {
  const FinCat& C = *A;
  const int n = C.num_objects(), m = C.num_arrows();
  if (static_cast<int>(F.sets.size()) != n * n) throw Error("ShapeMismatch", "coend");
  std::vector<FinSet> parts;
  for (int a = 0; a < n; ++a) parts.push_back(F.sets[a * n + a]);
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
  for (int f = 0; f < m; ++f) {
    if (C.is_identity(f)) continue;
    const int a = C.src(f), a2 = C.tgt(f);
    const auto& left = F.maps[f * m + C.identity(a)];
    const auto& right = F.maps[C.identity(a2) * m + f];
    for (int x = 0; x < F.sets[a2 * n + a].size(); ++x) rel.push_back({{a, left[x]}, {a2, right[x]}});
  }
  return colimit_of_parts(parts, C.tables().objects, rel);
}

Limit end(const Cat& A, const SetFunctor& F) {
  const FinCat& C = *A;
  const int n = C.num_objects(), m = C.num_arrows();
  if (static_cast<int>(F.sets.size()) != n * n) throw Error("ShapeMismatch", "end");
  std::vector<std::vector<int>> due(n);
  for (int f = 0; f < m; ++f)
    if (!C.is_identity(f)) due[std::max(C.src(f), C.tgt(f))].push_back(f);
  Limit L;
  std::vector<int> cur(n, -1);
  std::function<void(int)> go = [&](int a) {
    if (a == n) {
      L.families.push_back(cur);
      return;
    }
    for (int x = 0; x < F.sets[a * n + a].size(); ++x) {
      cur[a] = x;
      bool ok = true;
      for (int f : due[a]) {
        const int s = C.src(f), t = C.tgt(f);
        if (F.maps[C.identity(s) * m + f][cur[s]] != F.maps[f * m + C.identity(t)][cur[t]]) {
          ok = false;
          break;
        }
      }
      if (ok) go(a + 1);
    }
    cur[a] = -1;
  };
  go(0);
  for (const auto& fam : L.families) {
    std::vector<Id> parts;
    for (int a = 0; a < n; ++a) parts.push_back(F.sets[a * n + a][fam[a]]);
    L.apex.elems.push_back(tuple_id(parts));
  }
  return L;
}

int ElementsCat::find(int a, int s) const { return offset[a] + s; }

ElementsCat elements(const Cat& A, const SetFunctor& W) {
  const FinCat& C = *A;
  ElementsCat el;
  CatTables t;
  for (int a = 0; a < C.num_objects(); ++a) {
    el.offset.push_back(static_cast<int>(t.objects.size()));
    for (int s = 0; s < W.sets[a].size(); ++s) {
      t.objects.push_back(tuple_id({C.object_name(a), W.sets[a][s]}));
      el.object.emplace_back(a, s);
    }
  }
  // arrow (g, s') : (src g, W(g)(s')) → (tgt g, s')
  std::vector<int> start;
  std::vector<int> proj;
  for (int g = 0; g < C.num_arrows(); ++g) {
    start.push_back(static_cast<int>(t.arrows.size()));
    const int a = C.src(g), a2 = C.tgt(g);
    for (int s2 = 0; s2 < W.sets[a2].size(); ++s2) {
      t.arrows.push_back(tuple_id({C.arrow_name(g), W.sets[a2][s2]}));
      t.src.push_back(el.offset[a] + W.maps[g][s2]);
      t.tgt.push_back(el.offset[a2] + s2);
      proj.push_back(g);
    }
  }
  const int m = static_cast<int>(t.arrows.size());
  t.compose.assign(static_cast<std::size_t>(m) * m, -1);
  for (int g1 = 0; g1 < C.num_arrows(); ++g1)
    for (int g2 = 0; g2 < C.num_arrows(); ++g2) {
      int g = C.compose(g2, g1);
      if (g < 0) continue;
      for (int s3 = 0; s3 < W.sets[C.tgt(g2)].size(); ++s3) {
        int s2 = W.maps[g2][s3];
        t.compose[static_cast<std::size_t>(start[g2] + s3) * m + start[g1] + s2] = start[g] + s3;
      }
    }
  for (int a = 0; a < C.num_objects(); ++a)
    for (int s = 0; s < W.sets[a].size(); ++s) t.identity.push_back(start[C.identity(a)] + s);
  el.cat = FinCat::trusted(std::move(t));
  std::vector<int> pobj;
  for (auto [a, s] : el.object) pobj.push_back(a);
  el.projection = FinFunctor{el.cat, A, std::move(pobj), std::move(proj)};
  return el;
}

WeightedColimit weighted_colim(const Cat& A, const SetFunctor& W, const SetFunctor& D) {
  if (!same_category(D.shape, A) || !same_category(W.shape, op_cat(A)))
    throw Error("ShapeMismatch", "weighted_colim");
  WeightedColimit wc{elements(A, W), {}};
  wc.colimit = colimit_of_diagram(precompose(D, wc.el.projection));
  return wc;
}

Verdict check_weighted_adjunction(const Cat& A, const SetFunctor& W, const SetFunctor& D, const FinSet& S) {
  const FinCat& C = *A;
  const WeightedColimit wc = weighted_colim(A, W, D);
  const int k = S.size();
  auto code = [&](const std::vector<int>& phi) {
    int c = 0;
    for (int v : phi) c = c * k + v;
    return c;
  };
  // Set(D−, S) as a presheaf on A.
  SetFunctor P{W.shape, {}, {}};
  std::vector<std::vector<std::vector<int>>> funs;
  for (int a = 0; a < C.num_objects(); ++a) {
    funs.push_back(all_functions(D.sets[a].size(), k));
    FinSet s;
    for (const auto& phi : funs.back()) {
      std::vector<Id> imgs;
      for (int v : phi) imgs.push_back(S[v]);
      s.elems.push_back(table_id(imgs));
    }
    P.sets.push_back(std::move(s));
  }
  for (int g = 0; g < C.num_arrows(); ++g) {
    std::vector<int> m;
    for (const auto& phi : funs[C.tgt(g)]) {
      std::vector<int> pre;
      for (int x = 0; x < D.sets[C.src(g)].size(); ++x) pre.push_back(phi[D.maps[g][x]]);
      m.push_back(code(pre));
    }
    P.maps.push_back(std::move(m));
  }
  const auto right = nat_hom(W, P);
  const auto left = all_functions(wc.colimit.num_classes(), k);
  std::vector<char> hit(right.size(), 0);
  for (std::size_t i = 0; i < left.size(); ++i) {
    NatFamily fam;
    for (int a = 0; a < C.num_objects(); ++a) {
      std::vector<int> c;
      for (int s = 0; s < W.sets[a].size(); ++s) {
        std::vector<int> phi;
        for (int x = 0; x < D.sets[a].size(); ++x) phi.push_back(left[i][wc.cls(a, s, x)]);
        c.push_back(code(phi));
      }
      fam.comp.push_back(std::move(c));
    }
    int j = index_of(right, fam);
    if (j < 0) return Violation{"BijectionFails", "cocone #" + std::to_string(i) + " not natural"};
    if (hit[j]) return Violation{"BijectionFails", "cocone #" + std::to_string(i) + " collides"};
    hit[j] = 1;
  }
  if (left.size() != right.size())
    return Violation{"BijectionFails", std::to_string(left.size()) + " maps vs " + std::to_string(right.size()) +
                                           " natural families"};
  return std::nullopt;
}

// ------------------------------------------------------------ nerves

Nerve nerve(const FinFunctor& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const auto pos = hom_positions(B);
  Nerve n{f, Profunctor{f.dom, f.cod, SetFunctor{product_cat(op_cat(f.dom), f.cod), {}, {}}}, {}};
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      FinSet s;
      for (int h : B.hom(f.obj[a], b)) s.elems.push_back(B.arrow_name(h));
      n.body.body.sets.push_back(std::move(s));
    }
  for (int u = 0; u < A.num_arrows(); ++u)
    for (int v = 0; v < B.num_arrows(); ++v) {
      std::vector<int> m;
      for (int h : B.hom(f.obj[A.tgt(u)], B.src(v))) m.push_back(pos[B.compose(v, B.compose(h, f.arr[u]))]);
      n.body.body.maps.push_back(std::move(m));
    }
  for (int a = 0; a < A.num_objects(); ++a) n.chi.push_back(pos[B.identity(f.obj[a])]);
  return n;
}

Verdict check_exhibits_extension(const FinFunctor& f, const Profunctor& N, const std::vector<int>& chi) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  if (!same_category(N.src, f.dom) || !same_category(N.dst, f.cod)) throw Error("ShapeMismatch", "candidate");
  for (int a = 0; a < A.num_objects(); ++a)
    if (chi[a] < 0 || chi[a] >= N.at(a, f.obj[a]).size()) return Violation{"UnitOutOfRange", A.object_name(a)};
  for (int k = 0; k < A.num_arrows(); ++k) {
    const int a = A.src(k), a2 = A.tgt(k);
    if (N.act(A.identity(a), f.arr[k], chi[a]) != N.act(k, B.identity(f.obj[a2]), chi[a2]))
      return Violation{"UnitNotNatural", A.arrow_name(k)};
  }
  for (int a0 = 0; a0 < A.num_objects(); ++a0) {
    const ExtensionResult E = lan_set(f, corepresentable(f.dom, a0));
    for (int b = 0; b < B.num_objects(); ++b) {
      const Colimit& col = E.colimits[b];
      const CommaCat& cc = E.commas[b];
      std::vector<int> c(col.num_classes(), -1);
      for (int e = 0; e < col.quotient.carrier.size(); ++e) {
        auto [j, gi] = col.origin[e];
        const int a = cc.projection.obj[j];
        const int v = N.act(A.hom(a0, a)[gi], cc.arrow[j], chi[a]);
        const int k = col.class_number[e];
        if (c[k] >= 0 && c[k] != v)
          return Violation{"ComparisonNotWellDefined", A.object_name(a0) + "," + B.object_name(b)};
        c[k] = v;
      }
      if (!is_bijection(c, N.at(a0, b).size()))
        return Violation{"ComparisonNotBijective", A.object_name(a0) + "," + B.object_name(b)};
    }
  }
  return std::nullopt;
}

Checked<int> absolute_lifting_check(const FinFunctor& f, const Profunctor& N, const std::vector<int>& chi,
                                    const std::vector<Cat>& probes) {
  const Cat& A = f.dom;
  int pairs = 0;
  for (const Cat& X : probes)
    for (const FinFunctor& g : all_functors(X, f.dom))
      for (const FinFunctor& h : all_functors(X, f.cod)) {
        ++pairs;
        const int nx = X->num_objects();
        std::vector<SetFunctor> ys, cols;
        std::vector<std::vector<NatFamily>> homs;
        for (int x = 0; x < nx; ++x) {
          ys.push_back(yoneda(A, g.obj[x]));
          cols.push_back(N.column(h.obj[x]));
          homs.push_back(nat_hom(ys[x], cols[x]));
        }
        // 2-cells y g ⇒ N h: components natural in x.
        std::vector<std::vector<int>> left;
        std::vector<int> cur(nx, -1);
        std::function<void(int)> go = [&](int x) {
          if (x == nx) {
            left.push_back(cur);
            return;
          }
          for (int i = 0; i < static_cast<int>(homs[x].size()); ++i) {
            cur[x] = i;
            bool ok = true;
            for (int v = 0; v < X->num_arrows() && ok; ++v) {
              const int s = X->src(v), t = X->tgt(v);
              if (X->is_identity(v) || std::max(s, t) != x) continue;
              ok = vcompose(N.column_map(h.arr[v]), homs[s][cur[s]]) ==
                   vcompose(homs[t][cur[t]], yoneda_on_arrow(A, g.arr[v]));
            }
            if (ok) go(x + 1);
          }
          cur[x] = -1;
        };
        go(0);
        std::vector<char> hit(left.size(), 0);
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < left.size(); ++i) index.emplace(left[i], static_cast<int>(i));
        const auto right = all_nats(compose(f, g), h);
        const std::string where = X->object_name(0) + ":" + std::to_string(pairs);
        for (const CatNat& beta : right) {
          std::vector<int> img;
          for (int x = 0; x < nx; ++x) {
            const int a = g.obj[x];
            NatFamily c = vcompose(N.column_map(beta.comp[x]), yoneda_family(A, a, N.column(f.obj[a]), chi[a]));
            const int k = index_of(homs[x], c);
            if (k < 0) return Violation{"BijectionFails", where + " image not natural"};
            img.push_back(k);
          }
          auto it = index.find(img);
          if (it == index.end()) return Violation{"BijectionFails", where + " image not natural in the probe"};
          if (hit[it->second]) return Violation{"BijectionFails", where + " not injective"};
          hit[it->second] = 1;
        }
        if (right.size() != left.size()) return Violation{"BijectionFails", where + " not surjective"};
      }
  return pairs;
}

Checked<int> absolute_lifting_check(const FinFunctor& f, const std::vector<Cat>& probes) {
  const Nerve n = nerve(f);
  return absolute_lifting_check(f, n.body, n.chi, probes);
}

Verdict check_pasting_extension(const FinFunctor& f, const FinFunctor& g, const Profunctor& Ng,
                                const std::vector<int>& chi_g) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const FinCat& C = *g.cod;
  if (!same_category(f.cod, g.dom)) throw Error("ShapeMismatch", "pasting");
  // L(a, c) = Ng(f a, c)
  Profunctor L{f.dom, g.cod, {}};
  const Cat shape = product_cat(op_cat(f.dom), g.cod);
  FinFunctor reindex{shape, Ng.body.shape, {}, {}};
  for (int a = 0; a < A.num_objects(); ++a)
    for (int c = 0; c < C.num_objects(); ++c) reindex.obj.push_back(Ng.cell(f.obj[a], c));
  for (int u = 0; u < A.num_arrows(); ++u)
    for (int w = 0; w < C.num_arrows(); ++w) reindex.arr.push_back(Ng.arrow(f.arr[u], w));
  L.body = precompose(Ng.body, reindex);
  const auto pos = hom_positions(B);
  std::vector<int> chi;
  for (int a = 0; a < A.num_objects(); ++a) {
    const int b = f.obj[a];
    NatFamily chi_b = yoneda_family(f.cod, b, Ng.column(g.obj[b]), chi_g[b]);
    chi.push_back(chi_b.comp[b][pos[B.identity(b)]]);
  }
  return check_exhibits_extension(compose(g, f), L, chi);
}

Verdict check_pasting_extension(const FinFunctor& f, const FinFunctor& g) {
  const Nerve n = nerve(g);
  return check_pasting_extension(f, g, n.body, n.chi);
}

bool is_nervous(const FinFunctor& f) { return !check_functor(f).has_value(); }

// ----------------------------------------------------------- lattices

Checked<FinFunctor> formal_kan_lemma(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(g.dom, f.dom)) throw Error("ShapeMismatch", "formal_kan_lemma");
  FinLattice L;
  try {
    L = lattice_from_poset(f.cod);
  } catch (const Error& e) {
    throw Error("NotCocomplete", e.witness());
  }
  const FinCat& A = *f.dom;
  const FinCat& C = *g.cod;
  const FinCat& Lc = *f.cod;
  std::vector<int> obj(C.num_objects(), L.bottom);
  for (int l = 0; l < L.size(); ++l) {
    // (y_L f)(−)(l) = hom_L(l, f −)
    SetFunctor Z{f.dom, {}, {}};
    for (int a = 0; a < A.num_objects(); ++a) {
      FinSet s;
      for (int h : Lc.hom(l, f.obj[a])) s.elems.push_back(Lc.arrow_name(h));
      Z.sets.push_back(std::move(s));
    }
    for (int u = 0; u < A.num_arrows(); ++u)
      Z.maps.push_back(std::vector<int>(Z.sets[A.src(u)].size(), 0));
    const ExtensionResult E = lan_set(g, Z);
    for (int c = 0; c < C.num_objects(); ++c)
      if (E.extension.sets[c].size() > 0) obj[c] = L.join(obj[c], l);
  }
  for (int c = 0; c < C.num_objects(); ++c)
    for (int c2 = 0; c2 < C.num_objects(); ++c2)
      if (!C.hom(c, c2).empty() && !L.leq(obj[c], obj[c2]))
        return Violation{"NotMonotone", C.object_name(c) + "," + C.object_name(c2)};
  FinFunctor ext = thin_functor(g.cod, f.cod, obj);
  for (int a = 0; a < A.num_objects(); ++a)
    if (!L.leq(f.obj[a], obj[g.obj[a]])) return Violation{"UnitFails", A.object_name(a)};
  for (const FinFunctor& h : all_functors(g.cod, f.cod)) {
    bool below = true, unit_below = true;
    for (int c = 0; c < C.num_objects(); ++c) below = below && L.leq(obj[c], h.obj[c]);
    for (int a = 0; a < A.num_objects(); ++a) unit_below = unit_below && L.leq(f.obj[a], h.obj[g.obj[a]]);
    if (below != unit_below) {
      std::vector<Id> names;
      for (int c : h.obj) names.push_back(Lc.object_name(c));
      return Violation{"NotUniversal", tuple_id(names)};
    }
  }
  return ext;
}

Checked<AdjunctionWitness> formal_aft(const FinFunctor& f) {
  const FinLattice L = lattice_from_poset(f.dom);
  const FinLattice M = lattice_from_poset(f.cod);
  const FinCat& Lc = *f.dom;
  if (f.obj[L.bottom] != M.bottom) return Violation{"JoinNotPreserved", "bottom"};
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b)
      if (f.obj[L.join(a, b)] != M.join(f.obj[a], f.obj[b]))
        return Violation{"JoinNotPreserved", Lc.object_name(a) + "," + Lc.object_name(b)};
  auto r = formal_kan_lemma(f, identity_functor(f.dom));
  if (!r) return r.violation();
  return check_thin_adjunction(f, r.value());
}

}  // namespace fcat
