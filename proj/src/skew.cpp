#include "fcat/skew.hpp"

#include <map>
#include <random>

#include "fcat/exec.hpp"
#include "fcat/presheaf.hpp"

namespace fcat {

namespace {

constexpr long long kMaxPart = 4'000'000;

long long power(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxPart) throw Error("TooLarge", "skew extension part");
  }
  return r;
}

long long encode(const std::vector<int>& h, int n) {
  long long code = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) code = code * n + *it;
  return code;
}

std::vector<int> decode(long long code, int n, int len) {
  std::vector<int> h(len);
  for (int i = 0; i < len; ++i) {
    h[i] = static_cast<int>(code % n);
    code /= n;
  }
  return h;
}

std::string indices_id(const std::vector<int>& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h[i]);
  }
  return s + "]";
}

void mutate(NatFamily& m, SkewMutation want, SkewMutation have, int target_size) {
  if (want != have || m.comp.empty()) return;
  auto& c = m.comp[0];
  if (have == SkewMutation::gamma_swap) {
    if (c.size() >= 2) std::swap(c[0], c[1]);
  } else if (!c.empty() && target_size >= 2) {
    c[0] = (c[0] + 1) % target_size;
  }
}

SetFunctor constant_on(const Cat& X, const FinSet& S) { return constant_set_functor(X, S); }

// First object and element where two maps with a common source disagree.
Verdict compare(const char* axiom, const SkewContext& ctx, const SetFunctor& source, const NatFamily& a,
                const NatFamily& b, int& counter) {
  for (int x = 0; x < ctx.X->num_objects(); ++x)
    for (int e = 0; e < source.sets[x].size(); ++e) {
      if (a.comp[x][e] != b.comp[x][e])
        return Violation{"DiagramFails", std::string(axiom) + "," + ctx.X->object_name(x) + "," + source.sets[x][e]};
      ++counter;
    }
  return std::nullopt;
}

}  // namespace

FinSet probe_set(int n) {
  FinSet s;
  for (int i = 0; i < n; ++i) s.elems.push_back(std::to_string(i));
  return s;
}

SkewContext make_skew_context(const Cat& X, const SetFunctor& J, int probe_size) {
  if (!same_category(J.shape, X)) throw Error("InvalidRoot", "shape");
  if (auto v = check_set_functor(J)) throw Error("InvalidRoot", v->str());
  SkewContext ctx{X, J, {}, SkewMutation::none};
  for (int n = 0; n <= probe_size; ++n) ctx.probes.push_back(probe_set(n));
  return ctx;
}

int JExtension::cls(int x, const std::vector<int>& h, int a) const {
  return colim.cls(x, static_cast<int>(encode(h, s_size) * f_size[x] + a));
}

JExtension::Raw JExtension::witness(int k) const {
  const auto [x, i] = colim.origin[reps[k]];
  return Raw{x, decode(i / f_size[x], s_size, j_size[x]), i % f_size[x]};
}

JExtension extend_at(const SkewContext& ctx, const SetFunctor& F, const FinSet& S) {
  const FinCat& X = *ctx.X;
  const SetFunctor& J = ctx.J;
  const int n = S.size();
  JExtension E;
  E.s_size = n;
  std::vector<FinSet> parts;
  std::vector<Id> tags;
  for (int x = 0; x < X.num_objects(); ++x) {
    E.f_size.push_back(F.sets[x].size());
    E.j_size.push_back(J.sets[x].size());
    const long long count = power(n, E.j_size[x]);
    FinSet part;
    for (long long c = 0; c < count; ++c) {
      const std::string h = indices_id(decode(c, n, E.j_size[x]));
      for (int a = 0; a < E.f_size[x]; ++a) part.elems.push_back("(" + h + "," + F.sets[x][a] + ")");
    }
    parts.push_back(std::move(part));
    tags.push_back(X.object_name(x));
  }
  // (x1, h J(u), a) ~ (x2, h, F(u) a) for u: x1 → x2.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rel;
  for (int u = 0; u < X.num_arrows(); ++u) {
    if (X.is_identity(u)) continue;
    const int x1 = X.src(u), x2 = X.tgt(u);
    const long long count = power(n, E.j_size[x2]);
    for (long long c = 0; c < count; ++c) {
      const std::vector<int> h = decode(c, n, E.j_size[x2]);
      std::vector<int> hj(E.j_size[x1]);
      for (int i = 0; i < E.j_size[x1]; ++i) hj[i] = h[J.maps[u][i]];
      const long long c1 = encode(hj, n);
      for (int a = 0; a < E.f_size[x1]; ++a)
        rel.push_back({{x1, static_cast<int>(c1 * E.f_size[x1] + a)},
                       {x2, static_cast<int>(c * E.f_size[x2] + F.maps[u][a])}});
    }
  }
  E.colim = colimit_of_parts(parts, tags, rel);
  E.reps = E.colim.representatives();
  return E;
}

SkewProduct skew_prod(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G) {
  if (!same_category(F.shape, ctx.X) || !same_category(G.shape, ctx.X)) throw Error("ShapeMismatch", "skew_prod");
  const FinCat& X = *ctx.X;
  SkewProduct P;
  P.at = parallel_map<JExtension>(X.num_objects(), [&](int x) { return extend_at(ctx, F, G.sets[x]); });
  P.value.shape = ctx.X;
  for (const auto& e : P.at) P.value.sets.push_back(e.colim.classes);
  for (int v = 0; v < X.num_arrows(); ++v) {
    const int x = X.src(v), x2 = X.tgt(v);
    std::vector<int> m;
    for (int k = 0; k < P.at[x].size(); ++k) {
      auto r = P.at[x].witness(k);
      for (int& i : r.h) i = G.maps[v][i];
      m.push_back(P.at[x2].cls(r.x, r.h, r.a));
    }
    P.value.maps.push_back(std::move(m));
  }
  return P;
}

// ------------------------------------------------------- structure maps

NatFamily gamma_map(const SkewContext& ctx, const SkewProduct& AB, const SkewProduct& AB_C, const SkewProduct& BC,
                    const SkewProduct& A_BC) {
  NatFamily g;
  for (int x = 0; x < ctx.X->num_objects(); ++x) {
    std::vector<int> c;
    for (int e = 0; e < AB_C.at[x].size(); ++e) {
      const auto outer = AB_C.at[x].witness(e);
      const auto inner = AB.at[outer.x].witness(outer.a);
      std::vector<int> t;
      for (int k : inner.h) t.push_back(BC.at[x].cls(outer.x, outer.h, k));
      c.push_back(A_BC.at[x].cls(inner.x, t, inner.a));
    }
    g.comp.push_back(std::move(c));
  }
  const int target = ctx.X->num_objects() ? A_BC.at[0].size() : 0;
  mutate(g, ctx.mutation, SkewMutation::gamma_swap, target);
  mutate(g, ctx.mutation, SkewMutation::gamma_shift, target);
  return g;
}

NatFamily lambda_map(const SkewContext& ctx, const SkewProduct& JA) {
  NatFamily l;
  for (int x = 0; x < ctx.X->num_objects(); ++x) {
    std::vector<int> c;
    for (int e = 0; e < JA.at[x].size(); ++e) {
      const auto r = JA.at[x].witness(e);
      c.push_back(r.h[r.a]);
    }
    l.comp.push_back(std::move(c));
  }
  mutate(l, ctx.mutation, SkewMutation::lambda_shift, ctx.X->num_objects() ? JA.at[0].s_size : 0);
  return l;
}

NatFamily rho_map(const SkewContext& ctx, const SetFunctor& A, const SkewProduct& AJ) {
  NatFamily r;
  for (int x = 0; x < ctx.X->num_objects(); ++x) {
    std::vector<int> id(ctx.J.sets[x].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::vector<int> c;
    for (int a = 0; a < A.sets[x].size(); ++a) c.push_back(AJ.at[x].cls(x, id, a));
    r.comp.push_back(std::move(c));
  }
  mutate(r, ctx.mutation, SkewMutation::rho_shift, ctx.X->num_objects() ? AJ.at[0].size() : 0);
  return r;
}

NatFamily whisker_first(const SkewProduct& from, const SkewProduct& to, const NatFamily& alpha) {
  NatFamily w;
  for (std::size_t x = 0; x < from.at.size(); ++x) {
    std::vector<int> c;
    for (int e = 0; e < from.at[x].size(); ++e) {
      const auto r = from.at[x].witness(e);
      c.push_back(to.at[x].cls(r.x, r.h, alpha.comp[r.x][r.a]));
    }
    w.comp.push_back(std::move(c));
  }
  return w;
}

NatFamily whisker_second(const SkewProduct& from, const SkewProduct& to, const NatFamily& beta) {
  NatFamily w;
  for (std::size_t x = 0; x < from.at.size(); ++x) {
    std::vector<int> c;
    for (int e = 0; e < from.at[x].size(); ++e) {
      auto r = from.at[x].witness(e);
      for (int& i : r.h) i = beta.comp[x][i];
      c.push_back(to.at[x].cls(r.x, r.h, r.a));
    }
    w.comp.push_back(std::move(c));
  }
  return w;
}

SkewMap gamma_at(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G, const SetFunctor& H) {
  const SkewProduct FG = skew_prod(ctx, F, G), GH = skew_prod(ctx, G, H);
  const SkewProduct FG_H = skew_prod(ctx, FG.value, H), F_GH = skew_prod(ctx, F, GH.value);
  return SkewMap{"gamma", gamma_map(ctx, FG, FG_H, GH, F_GH)};
}

SkewMap lambda_at(const SkewContext& ctx, const SetFunctor& F) {
  return SkewMap{"lambda", lambda_map(ctx, skew_prod(ctx, ctx.J, F))};
}

SkewMap rho_at(const SkewContext& ctx, const SetFunctor& G) {
  return SkewMap{"rho", rho_map(ctx, G, skew_prod(ctx, G, ctx.J))};
}

// ------------------------------------------------------------ coherence

Checked<CoherenceReport> check_coherence(const SkewContext& ctx, const SetFunctor& F, const SetFunctor& G,
                                         const SetFunctor& H, const SetFunctor& K) {
  CoherenceReport rep;
  rep.checked.assign(4, 0);
  for (const auto& p : ctx.probes) rep.probe_sizes.push_back(p.size());
  std::vector<SetFunctor> with_probes{};
  auto variants = [&](const SetFunctor& base) {
    std::vector<SetFunctor> out{base};
    for (const auto& p : ctx.probes) out.push_back(constant_on(ctx.X, p));
    return out;
  };
  const SetFunctor& J = ctx.J;

  // skm1: γ_{F,G,HK} γ_{FG,H,K} = (F◁γ_{G,H,K}) γ_{F,GH,K} (γ_{F,G,H}◁K).
  const SkewProduct FG = skew_prod(ctx, F, G), GH = skew_prod(ctx, G, H);
  const SkewProduct FG_H = skew_prod(ctx, FG.value, H), F_GH = skew_prod(ctx, F, GH.value);
  const NatFamily gFGH = gamma_map(ctx, FG, FG_H, GH, F_GH);
  for (const SetFunctor& K2 : variants(K)) {
    const SkewProduct FG_H_K = skew_prod(ctx, FG_H.value, K2);
    const SkewProduct HK = skew_prod(ctx, H, K2);
    const SkewProduct FG_HK = skew_prod(ctx, FG.value, HK.value);
    const SkewProduct G_HK = skew_prod(ctx, G, HK.value);
    const SkewProduct F_G_HK = skew_prod(ctx, F, G_HK.value);
    const SkewProduct F_GH_K = skew_prod(ctx, F_GH.value, K2);
    const SkewProduct GH_K = skew_prod(ctx, GH.value, K2);
    const SkewProduct F_GHK = skew_prod(ctx, F, GH_K.value);
    const NatFamily top = vcompose(gamma_map(ctx, FG, FG_HK, G_HK, F_G_HK), gamma_map(ctx, FG_H, FG_H_K, HK, FG_HK));
    const NatFamily bottom =
        vcompose(whisker_second(F_GHK, F_G_HK, gamma_map(ctx, GH, GH_K, HK, G_HK)),
                 vcompose(gamma_map(ctx, F_GH, F_GH_K, GH_K, F_GHK), whisker_first(FG_H_K, F_GH_K, gFGH)));
    if (auto v = compare("skm1", ctx, FG_H_K.value, top, bottom, rep.checked[0])) return *v;
  }

  for (const SetFunctor& G2 : variants(G)) {
    // skm2, right: γ_{F,G,J} ρ_{F◁G} = F◁ρ_G.
    const SkewProduct FG2 = skew_prod(ctx, F, G2);
    const SkewProduct FG_J = skew_prod(ctx, FG2.value, J);
    const SkewProduct GJ = skew_prod(ctx, G2, J);
    const SkewProduct F_GJ = skew_prod(ctx, F, GJ.value);
    const NatFamily r1 = vcompose(gamma_map(ctx, FG2, FG_J, GJ, F_GJ), rho_map(ctx, FG2.value, FG_J));
    const NatFamily r2 = whisker_second(FG2, F_GJ, rho_map(ctx, G2, GJ));
    if (auto v = compare("skm2", ctx, FG2.value, r1, r2, rep.checked[1])) return *v;
    // skm2, left: λ_{F◁G} γ_{J,F,G} = λ_F◁G.
    const SkewProduct JF = skew_prod(ctx, J, F);
    const SkewProduct JF_G = skew_prod(ctx, JF.value, G2);
    const SkewProduct J_FG = skew_prod(ctx, J, FG2.value);
    const NatFamily l1 = vcompose(lambda_map(ctx, J_FG), gamma_map(ctx, JF, JF_G, FG2, J_FG));
    const NatFamily l2 = whisker_first(JF_G, FG2, lambda_map(ctx, JF));
    if (auto v = compare("skm2", ctx, JF_G.value, l1, l2, rep.checked[1])) return *v;
    // skm4: (F◁λ_G) γ_{F,J,G} (ρ_F◁G) = 1.
    const SkewProduct FJ = skew_prod(ctx, F, J);
    const SkewProduct FJ_G = skew_prod(ctx, FJ.value, G2);
    const SkewProduct JG = skew_prod(ctx, J, G2);
    const SkewProduct F_JG = skew_prod(ctx, F, JG.value);
    const NatFamily z = vcompose(whisker_second(F_JG, FG2, lambda_map(ctx, JG)),
                                 vcompose(gamma_map(ctx, FJ, FJ_G, JG, F_JG), whisker_first(FG2, FJ_G, rho_map(ctx, F, FJ))));
    if (auto v = compare("skm4", ctx, FG2.value, z, identity_family(FG2.value), rep.checked[3])) return *v;
  }

  // skm3: λ_J ρ_J = 1.
  const SkewProduct JJ = skew_prod(ctx, J, J);
  const NatFamily t = vcompose(lambda_map(ctx, JJ), rho_map(ctx, J, JJ));
  if (auto v = compare("skm3", ctx, J, t, identity_family(J), rep.checked[2])) return *v;
  return rep;
}

// ------------------------------------------------------------ normality

NormalityReport normality_report(const SkewContext& ctx, const std::vector<SetFunctor>& samples) {
  const FinCat& X = *ctx.X;
  const SetFunctor& J = ctx.J;
  NormalityReport r;

  r.fully_faithful = true;
  for (int x = 0; x < X.num_objects() && r.fully_faithful; ++x)
    for (int y = 0; y < X.num_objects() && r.fully_faithful; ++y) {
      std::vector<std::vector<int>> images;
      for (int u : X.hom(x, y)) images.push_back(J.maps[u]);
      std::sort(images.begin(), images.end());
      const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
      const long long all = power(J.sets[y].size(), J.sets[x].size());
      r.fully_faithful = injective && static_cast<long long>(images.size()) == all;
    }

  r.dense = true;
  for (const auto& S : ctx.probes) {
    const JExtension E = extend_at(ctx, J, S);
    std::vector<int> sigma;
    for (int k = 0; k < E.size(); ++k) {
      const auto w = E.witness(k);
      sigma.push_back(w.h[w.a]);
    }
    if (!is_bijection(sigma, S.size())) r.dense = false;
  }

  auto bijective = [](const NatFamily& m, const SetFunctor& cod) {
    for (std::size_t x = 0; x < m.comp.size(); ++x)
      if (!is_bijection(m.comp[x], cod.sets[x].size())) return false;
    return true;
  };

  std::vector<std::pair<std::string, SetFunctor>> rho_inputs, lambda_inputs;
  for (int x = 0; x < X.num_objects(); ++x) rho_inputs.emplace_back("X(" + X.object_name(x) + ",-)", corepresentable(ctx.X, x));
  for (const auto& p : ctx.probes) lambda_inputs.emplace_back("const " + std::to_string(p.size()), constant_on(ctx.X, p));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    rho_inputs.emplace_back("sample " + std::to_string(i), samples[i]);
    lambda_inputs.emplace_back("sample " + std::to_string(i), samples[i]);
  }
  r.rho_invertible = true;
  for (const auto& [name, A] : rho_inputs) {
    const SkewProduct AJ = skew_prod(ctx, A, J);
    if (!bijective(rho_map(ctx, A, AJ), AJ.value)) {
      r.rho_invertible = false;
      r.rho_witness = name;
      break;
    }
  }
  r.lambda_invertible = true;
  for (const auto& [name, A] : lambda_inputs) {
    if (!bijective(lambda_map(ctx, skew_prod(ctx, J, A)), A)) {
      r.lambda_invertible = false;
      r.lambda_witness = name;
      break;
    }
  }
  r.gamma_invertible = true;
  const std::size_t m = std::min<std::size_t>(samples.size(), 3);
  for (std::size_t i = 0; i < m && r.gamma_invertible; ++i)
    for (std::size_t j = 0; j < m && r.gamma_invertible; ++j)
      for (std::size_t k = 0; k < m && r.gamma_invertible; ++k) {
        const SkewProduct FG = skew_prod(ctx, samples[i], samples[j]), GH = skew_prod(ctx, samples[j], samples[k]);
        const SkewProduct FG_H = skew_prod(ctx, FG.value, samples[k]), F_GH = skew_prod(ctx, samples[i], GH.value);
        if (!bijective(gamma_map(ctx, FG, FG_H, GH, F_GH), F_GH.value)) {
          r.gamma_invertible = false;
          r.gamma_witness = "samples " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
        }
      }
  return r;
}

// ---------------------------------------------------------------- mates

Checked<int> mate_roundtrip(const SkewContext& ctx, const SetFunctor& U, const SetFunctor& W) {
  const FinCat& X = *ctx.X;
  const SkewProduct WJ = skew_prod(ctx, W, ctx.J);
  const auto cells = nat_hom(U, WJ.value);
  std::vector<FinSet> sets = ctx.probes;
  for (int x = 0; x < X.num_objects(); ++x) sets.push_back(ctx.J.sets[x]);
  std::vector<JExtension> JU, JW;
  for (const auto& S : sets) {
    JU.push_back(extend_at(ctx, U, S));
    JW.push_back(extend_at(ctx, W, S));
  }
  const std::size_t np = ctx.probes.size();

  // •ϖ at S: [h, u]@x ↦ [h k, w]@x1 where ϖ_x(u) = [k, w]@x1.
  auto mate = [&](const NatFamily& w, std::size_t s) -> Checked<std::vector<int>> {
    const JExtension& from = JU[s];
    std::vector<int> out(from.size(), -1);
    for (std::size_t r = 0; r < from.colim.origin.size(); ++r) {
      const auto [x, i] = from.colim.origin[r];
      const std::vector<int> h = decode(i / from.f_size[x], from.s_size, from.j_size[x]);
      const auto img = WJ.at[x].witness(w.comp[x][i % from.f_size[x]]);
      std::vector<int> hk;
      for (int j : img.h) hk.push_back(h[j]);
      const int v = JW[s].cls(img.x, hk, img.a);
      int& slot = out[from.colim.class_number[r]];
      if (slot >= 0 && slot != v) return Violation{"MateNotWellDefined", from.colim.quotient.carrier[static_cast<int>(r)]};
      slot = v;
    }
    return out;
  };
  // χ• at x: u ↦ χ_{J x}([id, u]@x).
  auto unmate = [&](const std::vector<std::vector<int>>& chi) {
    NatFamily w;
    for (int x = 0; x < X.num_objects(); ++x) {
      std::vector<int> id(ctx.J.sets[x].size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      std::vector<int> c;
      for (int u = 0; u < U.sets[x].size(); ++u) c.push_back(chi[np + x][JU[np + x].cls(x, id, u)]);
      w.comp.push_back(std::move(c));
    }
    return w;
  };

  int n = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<std::vector<int>> chi;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      auto m = mate(cells[c], s);
      if (!m.ok()) return m.violation();
      chi.push_back(m.value());
    }
    if (!(unmate(chi) == cells[c])) return Violation{"MateRoundTripFails", "cell " + std::to_string(c)};
    // Naturality of •ϖ along every function between probes.
    for (std::size_t s = 0; s < np; ++s)
      for (std::size_t t = 0; t < np; ++t)
        for (const auto& f : all_functions(sets[s].size(), sets[t].size()))
          for (int k = 0; k < JU[s].size(); ++k) {
            auto a = JU[s].witness(k);
            for (int& i : a.h) i = f[i];
            auto b = JW[s].witness(chi[s][k]);
            for (int& i : b.h) i = f[i];
            if (chi[t][JU[t].cls(a.x, a.h, a.a)] != JW[t].cls(b.x, b.h, b.a))
              return Violation{"MateNotNatural", "cell " + std::to_string(c)};
          }
    for (std::size_t s = 0; s < sets.size(); ++s) {
      auto again = mate(unmate(chi), s);
      if (!again.ok() || again.value() != chi[s]) return Violation{"MateRoundTripFails", "cell " + std::to_string(c)};
    }
    ++n;
  }
  return n;
}

// --------------------------------------------------------------- corpus

FinSetFragment finset_fragment(const std::vector<int>& sizes) {
  CatTables t;
  std::vector<std::vector<int>> table;
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int s : sizes) t.objects.push_back(std::to_string(s));
  const int n = static_cast<int>(sizes.size());
  t.identity.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& f : all_functions(sizes[i], sizes[j])) {
        const int k = static_cast<int>(t.arrows.size());
        t.arrows.push_back(t.objects[i] + ">" + t.objects[j] + indices_id(f));
        t.src.push_back(i);
        t.tgt.push_back(j);
        bool id = i == j;
        for (std::size_t e = 0; e < f.size() && id; ++e) id = f[e] == static_cast<int>(e);
        if (id) t.identity[i] = k;
        index[{i, j, f}] = k;
        table.push_back(std::move(f));
      }
  const int m = static_cast<int>(t.arrows.size());
  t.compose.assign(m * m, -1);
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (t.tgt[f] != t.src[g]) continue;
      std::vector<int> gf;
      for (int v : table[f]) gf.push_back(table[g][v]);
      t.compose[g * m + f] = index.at({t.src[f], t.tgt[g], gf});
    }
  FinSetFragment out{FinCat::make(std::move(t)), {}};
  std::vector<FinSet> sets;
  for (int s : sizes) sets.push_back(probe_set(s));
  out.J = make_set_functor(out.X, std::move(sets), std::move(table));
  return out;
}

std::vector<SkewInstance> skew_corpus(std::uint64_t seed, int probe_size) {
  std::vector<std::pair<std::string, SkewContext>> ctxs;
  const Cat one = corpus::one(), two = corpus::two(), d2 = corpus::discrete(2);
  ctxs.emplace_back("point-1", make_skew_context(one, constant_set_functor(one, FinSet{{"*"}}), probe_size));
  ctxs.emplace_back("point-2", make_skew_context(one, constant_set_functor(one, FinSet{{"a", "b"}}), probe_size));
  const FinSetFragment frag = finset_fragment({1, 2});
  ctxs.emplace_back("fragment-1-2", make_skew_context(frag.X, frag.J, probe_size));
  {
    std::vector<std::vector<int>> maps;
    for (int u = 0; u < two->num_arrows(); ++u)
      maps.push_back(two->is_identity(u) ? (two->src(u) == 0 ? std::vector<int>{0} : std::vector<int>{0, 1})
                                         : std::vector<int>{0});
    ctxs.emplace_back("arrow", make_skew_context(two, make_set_functor(two, {FinSet{{"a"}}, FinSet{{"a", "b"}}}, maps),
                                                 probe_size));
  }
  ctxs.emplace_back("discrete-2", make_skew_context(d2, constant_set_functor(d2, FinSet{{"*"}}), probe_size));

  std::vector<SkewInstance> out;
  std::mt19937_64 rng(seed);
  for (auto& [name, ctx] : ctxs) {
    SkewInstance inst{name, ctx, {{"J", ctx.J}}};
    for (int i = 0; i < 3; ++i)
      inst.samples.push_back({"S" + std::to_string(i), corpus::random_set_functor(ctx.X, rng, 2, 1)});
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace fcat
