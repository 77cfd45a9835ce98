#include "fcat/prof.hpp"

#include "fcat/exec.hpp"
#include "fcat/presheaf.hpp"

namespace fcat {

Profunctor hom_prof(const Cat& A) { return companion(identity_functor(A)); }

// ------------------------------------------------------------ composition

int ProfComposite::cls(int a, int c, int b, int p, int q) const {
  return cells[result.cell(a, c)].cls(b, p * q_size[b * num_c + c] + q);
}

std::array<int, 3> ProfComposite::witness(int a, int c, int x) const {
  const int cell = result.cell(a, c);
  auto [b, e] = cells[cell].origin[reps[cell][x]];
  const int qs = q_size[b * num_c + c];
  return {b, e / qs, e % qs};
}

void ProfComposite::for_each_raw(int a, int c, const std::function<void(int, int, int)>& fn) const {
  const Colimit& col = cells[result.cell(a, c)];
  for (const auto& [b, e] : col.origin) {
    const int qs = q_size[b * num_c + c];
    fn(b, e / qs, e % qs);
  }
}

ProfComposite compose_coend_full(const Profunctor& Q, const Profunctor& P) {
  if (!same_category(P.dst, Q.src)) throw Error("ShapeMismatch", "compose_coend");
  const FinCat& A = *P.src;
  const FinCat& B = *P.dst;
  const FinCat& C = *Q.dst;
  const int nA = A.num_objects(), nB = B.num_objects(), nC = C.num_objects();
  ProfComposite out;
  out.num_c = nC;
  for (int b = 0; b < nB; ++b)
    for (int c = 0; c < nC; ++c) out.q_size.push_back(Q.at(b, c).size());
  out.result = Profunctor{P.src, Q.dst, SetFunctor{product_cat(op_cat(P.src), Q.dst), {}, {}}};
  const auto& tags = B.tables().objects;
  out.cells = parallel_map<Colimit>(nA * nC, [&](int i) {
    const int a = i / nC, c = i % nC;
    std::vector<FinSet> parts;
    for (int b = 0; b < nB; ++b) {
      FinSet s;
      for (const auto& p : P.at(a, b).elems)
        for (const auto& q : Q.at(b, c).elems) s.elems.push_back(tuple_id({p, q}));
      parts.push_back(std::move(s));
    }
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
    for (int g = 0; g < B.num_arrows(); ++g) {
      if (B.is_identity(g)) continue;
      const int b = B.src(g), b2 = B.tgt(g);
      const int qs = Q.at(b, c).size(), qs2 = Q.at(b2, c).size();
      for (int x = 0; x < P.at(a, b).size(); ++x)
        for (int y = 0; y < qs2; ++y)
          rel.push_back({{b2, P.act(A.identity(a), g, x) * qs2 + y}, {b, x * qs + Q.act(g, C.identity(c), y)}});
    }
    return colimit_of_parts(parts, tags, rel);
  });
  for (const Colimit& col : out.cells) {
    out.result.body.sets.push_back(col.classes);
    out.reps.push_back(col.representatives());
  }
  for (int u = 0; u < A.num_arrows(); ++u)
    for (int w = 0; w < C.num_arrows(); ++w) {
      const int a = A.src(u), a2 = A.tgt(u), c = C.src(w), c2 = C.tgt(w);
      std::vector<int> m;
      for (int x = 0; x < out.cells[out.result.cell(a2, c)].num_classes(); ++x) {
        auto [b, p, q] = out.witness(a2, c, x);
        m.push_back(out.cls(a, c2, b, P.act(u, B.identity(b), p), Q.act(B.identity(b), w, q)));
      }
      out.result.body.maps.push_back(std::move(m));
    }
  return out;
}

Profunctor compose_coend(const Profunctor& Q, const Profunctor& P) { return compose_coend_full(Q, P).result; }

Checked<NatFamily> map_out_of(const ProfComposite& from, const RawRule& rule) {
  const int nA = from.result.src->num_objects(), nC = from.result.dst->num_objects();
  NatFamily out;
  for (int a = 0; a < nA; ++a)
    for (int c = 0; c < nC; ++c) {
      const Colimit& col = from.cells[from.result.cell(a, c)];
      std::vector<int> comp(col.num_classes(), -1);
      std::optional<Violation> bad;
      int idx = 0;
      from.for_each_raw(a, c, [&](int b, int p, int q) {
        const int x = col.class_number[idx++];
        const int y = rule(a, c, b, p, q);
        if (bad) return;
        if (comp[x] >= 0 && comp[x] != y)
          bad = Violation{"NotWellDefined", tuple_id({from.result.src->object_name(a),
                                                      from.result.dst->object_name(c), col.classes[x]})};
        comp[x] = y;
      });
      if (bad) return *bad;
      out.comp.push_back(std::move(comp));
    }
  return out;
}

Verdict check_prof_iso(const Profunctor& from, const Profunctor& to, const NatFamily& a) {
  if (auto v = check_nat_family(from.body, to.body, a)) return Violation{"NotNatural", v->witness};
  for (std::size_t i = 0; i < a.comp.size(); ++i)
    if (!is_bijection(a.comp[i], to.body.sets[i].size()))
      return Violation{"NotIso", from.body.shape->object_name(static_cast<int>(i))};
  return std::nullopt;
}

NatFamily invert_family(const NatFamily& a, const SetFunctor& cod) {
  NatFamily inv;
  for (std::size_t i = 0; i < a.comp.size(); ++i) {
    std::vector<int> c(cod.sets[i].size(), -1);
    for (std::size_t x = 0; x < a.comp[i].size(); ++x) c[a.comp[i][x]] = static_cast<int>(x);
    inv.comp.push_back(std::move(c));
  }
  return inv;
}

namespace {

Checked<NatFamily> verified(Checked<NatFamily> fam, const Profunctor& from, const Profunctor& to, bool iso) {
  if (!fam.ok()) return fam;
  if (iso) {
    if (auto v = check_prof_iso(from, to, fam.value())) return *v;
  } else if (auto v = check_nat_family(from.body, to.body, fam.value())) {
    return Violation{"NotNatural", v->witness};
  }
  return fam;
}

}  // namespace

Checked<NatFamily> left_unitor(const Profunctor& P) {
  const FinCat& A = *P.src;
  const FinCat& B = *P.dst;
  const ProfComposite C = compose_coend_full(hom_prof(P.dst), P);
  return verified(map_out_of(C, [&](int a, int c, int b, int p, int h) {
                    return P.act(A.identity(a), B.hom(b, c)[h], p);
                  }),
                  C.result, P, true);
}

Checked<NatFamily> right_unitor(const Profunctor& P) {
  const FinCat& A = *P.src;
  const FinCat& B = *P.dst;
  const ProfComposite C = compose_coend_full(P, hom_prof(P.src));
  return verified(map_out_of(C, [&](int a, int b, int a2, int h, int p) {
                    return P.act(A.hom(a, a2)[h], B.identity(b), p);
                  }),
                  C.result, P, true);
}

Checked<NatFamily> associator(const Profunctor& R, const Profunctor& Q, const Profunctor& P) {
  const ProfComposite RQ = compose_coend_full(R, Q);
  const ProfComposite QP = compose_coend_full(Q, P);
  const ProfComposite left = compose_coend_full(RQ.result, P);
  const ProfComposite right = compose_coend_full(R, QP.result);
  return verified(map_out_of(left,
                             [&](int a, int d, int b, int p, int y) {
                               auto [c, q, r] = RQ.witness(b, d, y);
                               return right.cls(a, d, c, QP.cls(a, c, b, p, q), r);
                             }),
                  left.result, right.result, true);
}

Checked<NatFamily> whisker_source(const Profunctor& Q, const Profunctor& P, const Profunctor& P2,
                                  const NatFamily& alpha) {
  const ProfComposite from = compose_coend_full(Q, P);
  const ProfComposite to = compose_coend_full(Q, P2);
  return verified(map_out_of(from,
                             [&](int a, int c, int b, int p, int q) {
                               return to.cls(a, c, b, alpha.comp[P.cell(a, b)][p], q);
                             }),
                  from.result, to.result, false);
}

Checked<NatFamily> whisker_target(const Profunctor& Q, const Profunctor& Q2, const NatFamily& beta,
                                  const Profunctor& P) {
  const ProfComposite from = compose_coend_full(Q, P);
  const ProfComposite to = compose_coend_full(Q2, P);
  return verified(map_out_of(from,
                             [&](int a, int c, int b, int p, int q) {
                               return to.cls(a, c, b, p, beta.comp[Q.cell(b, c)][q]);
                             }),
                  from.result, to.result, false);
}

// ------------------------------------------------- companions and conjoints

Profunctor companion(const FinFunctor& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const auto pos = hom_positions(B);
  Profunctor P{f.dom, f.cod, SetFunctor{product_cat(op_cat(f.dom), f.cod), {}, {}}};
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      FinSet s;
      for (int h : B.hom(f.obj[a], b)) s.elems.push_back(B.arrow_name(h));
      P.body.sets.push_back(std::move(s));
    }
  for (int u = 0; u < A.num_arrows(); ++u)
    for (int v = 0; v < B.num_arrows(); ++v) {
      std::vector<int> m;
      for (int h : B.hom(f.obj[A.tgt(u)], B.src(v))) m.push_back(pos[B.compose(v, B.compose(h, f.arr[u]))]);
      P.body.maps.push_back(std::move(m));
    }
  return P;
}

Profunctor conjoint(const FinFunctor& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const auto pos = hom_positions(B);
  Profunctor P{f.cod, f.dom, SetFunctor{product_cat(op_cat(f.cod), f.dom), {}, {}}};
  for (int b = 0; b < B.num_objects(); ++b)
    for (int a = 0; a < A.num_objects(); ++a) {
      FinSet s;
      for (int k : B.hom(b, f.obj[a])) s.elems.push_back(B.arrow_name(k));
      P.body.sets.push_back(std::move(s));
    }
  for (int u = 0; u < B.num_arrows(); ++u)
    for (int v = 0; v < A.num_arrows(); ++v) {
      std::vector<int> m;
      for (int k : B.hom(B.tgt(u), f.obj[A.src(v)])) m.push_back(pos[B.compose(f.arr[v], B.compose(k, u))]);
      P.body.maps.push_back(std::move(m));
    }
  return P;
}

namespace {

// Arrow of B named by element x of cell `cell` of P.
std::optional<int> read_arrow(const FinCat& B, const Profunctor& P, int cell, int x) {
  return B.find_arrow(P.body.sets[cell][x]);
}

Checked<NatFamily> chain(const std::vector<Checked<NatFamily>>& steps) {
  NatFamily acc;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].ok()) return steps[i].violation();
    acc = i == 0 ? steps[i].value() : vcompose(steps[i].value(), acc);
  }
  return acc;
}

Checked<NatFamily> inverse_of(const Checked<NatFamily>& iso, const SetFunctor& cod) {
  if (!iso.ok()) return iso;
  return invert_family(iso.value(), cod);
}

}  // namespace

Checked<ProfAdjunction> check_companion_adjunction(const FinFunctor& f, const Profunctor& L, const Profunctor& R) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  if (!same_category(L.src, f.dom) || !same_category(L.dst, f.cod) || !same_category(R.src, f.cod) ||
      !same_category(R.dst, f.dom))
    throw Error("ShapeMismatch", "companion adjunction");
  if (auto v = check_profunctor(L)) return Violation{"InvalidCompanion", v->str()};
  if (auto v = check_profunctor(R)) return Violation{"InvalidConjoint", v->str()};
  const int nA = A.num_objects();
  std::vector<int> chi(nA), psi(nA);
  for (int a = 0; a < nA; ++a) {
    const Id& id = B.arrow_name(B.identity(f.obj[a]));
    chi[a] = L.at(a, f.obj[a]).index_of(id);
    psi[a] = R.at(f.obj[a], a).index_of(id);
    if (chi[a] < 0 || psi[a] < 0) return Violation{"MissingIdentity", A.object_name(a)};
  }
  const Profunctor HA = hom_prof(f.dom), HB = hom_prof(f.cod);
  const ProfComposite RL = compose_coend_full(R, L);
  const ProfComposite LR = compose_coend_full(L, R);

  ProfAdjunction adj{L, R, {}, {}};
  for (int a = 0; a < nA; ++a)
    for (int a2 = 0; a2 < nA; ++a2) {
      std::vector<int> c;
      for (int u : A.hom(a, a2)) c.push_back(RL.cls(a, a2, f.obj[a], chi[a], R.act(B.identity(f.obj[a]), u, psi[a])));
      adj.unit.comp.push_back(std::move(c));
    }
  if (auto v = check_nat_family(HA.body, RL.result.body, adj.unit)) return Violation{"UnitNotNatural", v->witness};

  const auto pos = hom_positions(B);
  std::optional<Violation> unreadable;
  auto counit = map_out_of(LR, [&](int b, int b2, int a, int k, int h) {
    auto ka = read_arrow(B, R, R.cell(b, a), k);
    auto ha = read_arrow(B, L, L.cell(a, b2), h);
    if (!ka || !ha || B.compose(*ha, *ka) < 0) {
      if (!unreadable) unreadable = Violation{"UnreadableElement", B.object_name(b) + "," + B.object_name(b2)};
      return -1;
    }
    return pos[B.compose(*ha, *ka)];
  });
  if (unreadable) return *unreadable;
  if (!counit.ok()) return counit.violation();
  adj.counit = counit.value();
  if (auto v = check_nat_family(LR.result.body, HB.body, adj.counit)) return Violation{"CounitNotNatural", v->witness};

  // L ≅ L∘hom_A ⇒ L∘(R∘L) ≅ (L∘R)∘L ⇒ hom_B∘L ≅ L
  const Profunctor L_HA = compose_coend(L, HA);
  const Profunctor LR_L = compose_coend(LR.result, L);
  auto t1 = chain({inverse_of(right_unitor(L), L_HA.body), whisker_source(L, HA, RL.result, adj.unit),
                   inverse_of(associator(L, R, L), LR_L.body), whisker_target(LR.result, HB, adj.counit, L),
                   left_unitor(L)});
  if (!t1.ok()) return t1.violation();
  if (t1.value() != identity_family(L.body)) return Violation{"TriangleFails", "companion side"};

  // R ≅ hom_A∘R ⇒ (R∘L)∘R ≅ R∘(L∘R) ⇒ R∘hom_B ≅ R
  const Profunctor HA_R = compose_coend(HA, R);
  auto t2 = chain({inverse_of(left_unitor(R), HA_R.body), whisker_target(HA, RL.result, adj.unit, R),
                   associator(R, L, R), whisker_source(R, LR.result, HB, adj.counit), right_unitor(R)});
  if (!t2.ok()) return t2.violation();
  if (t2.value() != identity_family(R.body)) return Violation{"TriangleFails", "conjoint side"};
  return adj;
}

Checked<ProfAdjunction> check_companion_adjunction(const FinFunctor& f) {
  return check_companion_adjunction(f, companion(f), conjoint(f));
}

Checked<NatFamily> companion_composite_iso(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.cod, g.dom)) throw Error("ShapeMismatch", "companion_composite_iso");
  const FinCat& B = *f.cod;
  const FinCat& C = *g.cod;
  const auto posC = hom_positions(C);
  const ProfComposite GF = compose_coend_full(companion(g), companion(f));
  const Profunctor direct = companion(compose(g, f));
  return verified(map_out_of(GF,
                             [&](int a, int c, int b, int h, int k) {
                               const int ha = B.hom(f.obj[a], b)[h];
                               const int ka = C.hom(g.obj[b], c)[k];
                               return posC[C.compose(ka, g.arr[ha])];
                             }),
                  GF.result, direct, true);
}

Checked<NatFamily> mates_check(const AdjunctionWitness& adj) {
  const FinFunctor& f = adj.left;
  const FinFunctor& u = adj.right;
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const auto posA = hom_positions(A);
  const Profunctor from = companion(f);
  const Profunctor to = conjoint(u);
  NatFamily m;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      std::vector<int> c;
      for (int h : B.hom(f.obj[a], b)) c.push_back(posA[A.compose(u.arr[h], adj.unit.comp[a])]);
      m.comp.push_back(std::move(c));
    }
  if (auto v = check_prof_iso(from, to, m)) return *v;
  return m;
}

Checked<int> local_ff_check(const FinFunctor& f, const FinFunctor& g) {
  if (!same_category(f.dom, g.dom) || !same_category(f.cod, g.cod)) throw Error("ShapeMismatch", "local_ff_check");
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  const auto pos = hom_positions(B);
  const auto cells = all_nats(f, g);
  const Profunctor Jf = conjoint(f), Jg = conjoint(g), Cf = companion(f), Cg = companion(g);
  const auto post = nat_hom(Jf.body, Jg.body);
  const auto pre = nat_hom(Cg.body, Cf.body);
  if (cells.size() != post.size() || cells.size() != pre.size())
    return Violation{"BijectionFails", std::to_string(cells.size()) + " 2-cells, " + std::to_string(post.size()) +
                                           " conjoint cells, " + std::to_string(pre.size()) + " companion cells"};
  std::vector<char> hit_post(post.size(), 0), hit_pre(pre.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CatNat& alpha = cells[i];
    NatFamily p, q;
    for (int b = 0; b < B.num_objects(); ++b)
      for (int a = 0; a < A.num_objects(); ++a) {
        std::vector<int> c;
        for (int k : B.hom(b, f.obj[a])) c.push_back(pos[B.compose(alpha.comp[a], k)]);
        p.comp.push_back(std::move(c));
      }
    for (int a = 0; a < A.num_objects(); ++a)
      for (int b = 0; b < B.num_objects(); ++b) {
        std::vector<int> c;
        for (int h : B.hom(g.obj[a], b)) c.push_back(pos[B.compose(h, alpha.comp[a])]);
        q.comp.push_back(std::move(c));
      }
    const int j = index_of(post, p), k = index_of(pre, q);
    if (j < 0 || hit_post[j]) return Violation{"BijectionFails", "conjoint image of 2-cell #" + std::to_string(i)};
    if (k < 0 || hit_pre[k]) return Violation{"BijectionFails", "companion image of 2-cell #" + std::to_string(i)};
    hit_post[j] = hit_pre[k] = 1;
  }
  return static_cast<int>(cells.size());
}

// ----------------------------------------------------------------- currying

Curried curry_dualize(const Profunctor& P, const Cat& A, const Cat& B) {
  const FinCat& AB = *P.src;
  if (AB.num_objects() != A->num_objects() * B->num_objects() || AB.num_arrows() != A->num_arrows() * B->num_arrows())
    throw Error("ShapeMismatch", "curry_dualize");
  Curried out;
  out.target = product_cat(op_cat(B), P.dst);
  // Cell (a, b, c) sits at (a * |B| + b) * |C| + c in both layouts, and arrow
  // (u, v, w) at (u * |B₁| + v) * |C₁| + w, so the tables carry over.
  out.curried = Profunctor{A, out.target, SetFunctor{product_cat(op_cat(A), out.target), P.body.sets, P.body.maps}};
  if (auto v = check_profunctor(out.curried)) throw Error("CurryFails", v->str());
  return out;
}

Profunctor uncurry(const Profunctor& curried, const Cat& A, const Cat& B, const Cat& C) {
  const Cat AB = product_cat(A, B);
  Profunctor P{AB, C, SetFunctor{product_cat(op_cat(AB), C), curried.body.sets, curried.body.maps}};
  if (auto v = check_profunctor(P)) throw Error("CurryFails", v->str());
  return P;
}

Verdict check_curry_bijection(const Profunctor& P, const Profunctor& Q, const Cat& A, const Cat& B) {
  const Curried cp = curry_dualize(P, A, B);
  const Curried cq = curry_dualize(Q, A, B);
  const Profunctor back = uncurry(cp.curried, A, B, P.dst);
  if (!(back.body.sets == P.body.sets) || back.body.maps != P.body.maps) return Violation{"RoundTripFails", "uncurry"};
  const auto left = nat_hom(P.body, Q.body);
  const auto right = nat_hom(cp.curried.body, cq.curried.body);
  if (left.size() != right.size())
    return Violation{"BijectionFails", std::to_string(left.size()) + " vs " + std::to_string(right.size())};
  for (std::size_t i = 0; i < left.size(); ++i)
    if (index_of(right, left[i]) < 0) return Violation{"BijectionFails", "cell #" + std::to_string(i)};
  return std::nullopt;
}

}  // namespace fcat
