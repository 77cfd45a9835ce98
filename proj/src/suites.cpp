#include "fcat/suites.hpp"

#include <random>

#include "fcat/isbell.hpp"
#include "fcat/kan.hpp"
#include "fcat/presheaf.hpp"
#include "fcat/prof.hpp"
#include "fcat/relmonad.hpp"
#include "fcat/skew.hpp"

namespace fcat {

bool SuiteResult::ok() const { return failures() == 0; }

int SuiteResult::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.verdict.has_value();
  return n;
}

const SuiteCheck* SuiteResult::first_failure() const {
  for (const auto& c : checks)
    if (c.verdict) return &c;
  return nullptr;
}

namespace {

template <class T>
SuiteCheck from_checked(std::string check, std::string subject, const Checked<T>& r) {
  SuiteCheck c{std::move(check), std::move(subject), std::nullopt, 0, {}, false};
  if (!r.ok()) c.verdict = r.violation();
  return c;
}

}  // namespace

SuiteResult yoneda_axioms_suite(const std::vector<corpus::NamedCat>& cats,
                                const std::vector<corpus::NamedFunctor>& functors, const SuiteOptions& opt) {
  SuiteResult out{"yoneda-axioms", {}};
  for (const auto& [name, A] : cats)
    for (const auto& F : corpus::presheaves(A, opt.seed)) {
      SuiteCheck y{"yoneda-lemma", name + "/" + F.name, std::nullopt, 0, {}, false};
      for (int a = 0; a < A->num_objects() && !y.verdict; ++a) {
        auto r = check_yoneda_lemma(A, a, F.functor);
        if (r.ok()) y.count += r.value();
        else y.verdict = r.violation();
      }
      out.checks.push_back(std::move(y));
      auto d = density_check(A, F.functor);
      SuiteCheck c = from_checked("ya3-density", name + "/" + F.name, d);
      c.count = F.functor.total_size();
      out.checks.push_back(std::move(c));
    }
  const std::vector<Cat> probes{corpus::one(), corpus::two()};
  for (const auto& [name, f] : functors) {
    SuiteCheck adj{"ext-restrict-adjunction", name, std::nullopt, 0, {}, false};
    const auto left = corpus::presheaves(f.dom, opt.seed), right = corpus::presheaves(f.cod, opt.seed);
    for (const auto& F : left) {
      for (const auto& G : right) {
        auto r = check_ext_restrict_adjunction(f, F.functor, G.functor);
        if (!r.ok()) {
          adj.verdict = Violation{r.violation().kind, F.name + "," + G.name + ": " + r.violation().witness};
          break;
        }
        ++adj.count;
      }
      if (adj.verdict) break;
    }
    out.checks.push_back(std::move(adj));
    const Nerve N = nerve(f);
    out.checks.push_back({"ya1-extension", name, check_exhibits_extension(f, N.body, N.chi), 1, {}, false});
    auto lift = absolute_lifting_check(f, N.body, N.chi, probes);
    SuiteCheck l = from_checked("ya2-lifting", name, lift);
    if (lift.ok()) l.count = lift.value();
    out.checks.push_back(std::move(l));
  }
  for (const auto& [fn, f] : functors)
    for (const auto& [gn, g] : functors)
      if (same_category(f.cod, g.dom))
        out.checks.push_back({"ya4-pasting", gn + "." + fn, check_pasting_extension(f, g), 1, {}, false});
  return out;
}

SuiteResult relmonad_suite(const std::vector<corpus::NamedCat>& cats, const SuiteOptions& opt) {
  SuiteResult out{"relmonad-laws", {}};
  for (const auto& [name, A] : cats) {
    const PresheafMonad M = sample_monad(A, opt.seed);
    auto u = check_unit_laws(M);
    SuiteCheck cu = from_checked("unit-laws", name, u);
    if (u.ok()) cu.count = u.value().elements;
    out.checks.push_back(std::move(cu));

    const NestedTower t = sample_tower(A, opt.seed);
    auto a = check_assoc_law(t);
    SuiteCheck ca = from_checked("associativity", name, a);
    if (a.ok()) ca.count = a.value().elements;
    out.checks.push_back(std::move(ca));

    auto l = lax_idempotency_witness(M, nested_samples(M, opt.seed));
    SuiteCheck cl = from_checked("lax-idempotency", name, l);
    if (l.ok()) cl.count = l.value().samples;
    out.checks.push_back(std::move(cl));
  }
  return out;
}

SuiteResult kleisli_suite(const std::vector<corpus::NamedCat>& cats, int pairs, int triples,
                          const SuiteOptions& opt) {
  SuiteResult out{"kleisli", {}};
  if (cats.empty()) return out;
  std::mt19937_64 rng(opt.seed);
  auto pick = [&]() -> const corpus::NamedCat& { return cats[rng() % cats.size()]; };
  // Body of a random cell X ⇸ Y, redrawn when the generator gives up.
  auto cell = [&](const Cat& Y, const Cat& X) {
    for (int tries = 0;; ++tries) {
      try {
        return kleisli_cell(corpus::random_profunctor(Y, X, rng, 2));
      } catch (const Error& e) {
        if (e.kind() != "NoRandomFunctor" || tries >= 3) throw;
      }
    }
  };
  SuiteCheck agree{"kleisli-vs-coend", "random pairs", std::nullopt, 0, {}, false};
  for (int i = 0; i < pairs && !agree.verdict; ++i) {
    const auto& X = pick();
    const auto& Y = pick();
    const auto& Z = pick();
    const KleisliCell f = cell(Y.cat, X.cat);
    const KleisliCell g = cell(Z.cat, Y.cat);
    auto c = kleisli_vs_coend(g, f);
    if (!c.ok())
      agree.verdict = Violation{c.violation().kind,
                                "pair " + std::to_string(i) + " " + X.name + "," + Y.name + "," + Z.name + ": " +
                                    c.violation().witness};
    else
      ++agree.count;
  }
  out.checks.push_back(std::move(agree));

  SuiteCheck laws{"kleisli-unit-assoc", "random triples", std::nullopt, 0, {}, false};
  for (int i = 0; i < triples && !laws.verdict; ++i) {
    const auto& X = pick();
    const auto& Y = pick();
    const auto& Z = pick();
    const auto& W = pick();
    const KleisliCell f = cell(Y.cat, X.cat);
    const KleisliCell g = cell(Z.cat, Y.cat);
    const KleisliCell h = cell(W.cat, Z.cat);
    const std::string where = "triple " + std::to_string(i) + " ";
    auto a = kleisli_associator(h, g, f);
    if (!a.ok()) {
      laws.verdict = Violation{a.violation().kind, where + "assoc: " + a.violation().witness};
      break;
    }
    const KleisliCell gf = kleisli_compose(g, f);
    auto l = kleisli_left_unit(gf);
    auto r = kleisli_right_unit(gf);
    if (!l.ok()) laws.verdict = Violation{l.violation().kind, where + "left unit: " + l.violation().witness};
    else if (!r.ok()) laws.verdict = Violation{r.violation().kind, where + "right unit: " + r.violation().witness};
    else ++laws.count;
  }
  out.checks.push_back(std::move(laws));
  return out;
}

SuiteResult equipment_suite(const std::vector<corpus::NamedCat>& cats,
                            const std::vector<corpus::NamedFunctor>& functors,
                            const std::vector<corpus::NamedAdjunction>& adjunctions, int max_functors) {
  SuiteResult out{"equipment", {}};
  for (const auto& [name, f] : functors) {
    auto r = check_companion_adjunction(f);
    SuiteCheck c = from_checked("companion-adjunction", name, r);
    c.count = 1;
    out.checks.push_back(std::move(c));
  }
  for (const auto& [name, l, r] : adjunctions) {
    auto adj = check_thin_adjunction(l, r);
    if (!adj.ok()) {
      out.checks.push_back(from_checked("mates", name, adj));
      continue;
    }
    out.checks.push_back(from_checked("mates", name, mates_check(adj.value())));
  }
  for (const auto& A : cats)
    for (const auto& B : cats) {
      const auto fs = all_functors(A.cat, B.cat);
      const std::string subject = A.name + "->" + B.name;
      if (static_cast<int>(fs.size()) > max_functors) {
        out.checks.push_back({"local-ff", subject, std::nullopt, 0, std::to_string(fs.size()) + " functors", true});
        continue;
      }
      SuiteCheck c{"local-ff", subject, std::nullopt, 0, {}, false};
      for (std::size_t i = 0; i < fs.size() && !c.verdict; ++i)
        for (std::size_t j = 0; j < fs.size() && !c.verdict; ++j) {
          auto r = local_ff_check(fs[i], fs[j]);
          if (!r.ok())
            c.verdict = Violation{r.violation().kind, "#" + std::to_string(i) + ",#" + std::to_string(j) + ": " +
                                                          r.violation().witness};
          else
            c.count += r.value();
        }
      out.checks.push_back(std::move(c));
    }
  return out;
}

SuiteResult main_theorem_suite(const std::vector<corpus::NamedCat>& cats, const SuiteOptions& opt) {
  SuiteResult out{"main-theorem", {}};
  std::vector<Cat> cs;
  std::string names;
  for (const auto& [name, c] : cats) {
    cs.push_back(c);
    names += (names.empty() ? "" : ",") + name;
  }
  const RoundtripReport clean = main_theorem_roundtrip(cs, RoundtripMutation::none, opt.seed);
  for (const auto& r : clean.results)
    out.checks.push_back({"stage " + r.stage + " " + r.check, r.subject, r.verdict, r.count, {}, false});

  const std::pair<RoundtripMutation, const char*> mutations[] = {
      {RoundtripMutation::corrupt_chi, "corrupt-chi"},
      {RoundtripMutation::corrupt_mu, "corrupt-mu"},
      {RoundtripMutation::corrupt_companion, "corrupt-companion"}};
  for (const auto& [m, label] : mutations) {
    SuiteCheck c{std::string("mutation ") + label, names, std::nullopt, 0, {}, false};
    try {
      const RoundtripReport rep = main_theorem_roundtrip(cs, m, opt.seed);
      if (const StageResult* f = rep.first_failure())
        c.note = "caught at stage " + f->stage + " " + f->check + " " + f->subject + ": " + f->verdict->str();
      else
        c.verdict = Violation{"MutationNotCaught", label};
    } catch (const Error& e) {
      if (e.kind() != "NoMutationTarget") throw;
      c.skipped = true;
      c.note = "no category with a non-identity endomorphism";
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<int>> galois_right_adjoint(const FinFunctor& f) {
  const FinCat& L = *f.dom;
  const FinCat& M = *f.cod;
  std::vector<int> r;
  for (int m = 0; m < M.num_objects(); ++m) {
    int best = -1;
    for (int l = 0; l < L.num_objects(); ++l) {
      if (M.hom(f.obj[l], m).empty()) continue;
      bool greatest = true;
      for (int l2 = 0; l2 < L.num_objects() && greatest; ++l2)
        if (!M.hom(f.obj[l2], m).empty() && L.hom(l2, l).empty()) greatest = false;
      if (greatest) best = l;
    }
    if (best < 0) return std::nullopt;
    r.push_back(best);
  }
  return r;
}

SuiteResult aft_suite(int max_size) {
  SuiteResult out{"aft", {}};
  const auto lats = corpus::lattices_up_to(max_size);
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j) {
      SuiteCheck c{"aft-vs-galois", "L" + std::to_string(i) + "->L" + std::to_string(j), std::nullopt, 0, {}, false};
      int adjoints = 0;
      for (const FinFunctor& f : all_functors(lats[i].carrier, lats[j].carrier)) {
        const auto r = formal_aft(f);
        const auto g = galois_right_adjoint(f);
        if (r.ok() != g.has_value() || (g && r.value().right.obj != *g)) {
          std::string table;
          for (int x : f.obj) table += std::to_string(x);
          c.verdict = Violation{"OracleMismatch", "f=" + table};
          break;
        }
        adjoints += g.has_value();
        ++c.count;
      }
      c.note = std::to_string(adjoints) + " with right adjoint";
      out.checks.push_back(std::move(c));
    }
  return out;
}

SuiteResult skew_suite(const SuiteOptions& opt) {
  SuiteResult out{"skew-coherence", {}};
  const auto instances = skew_corpus(opt.seed, opt.probe_size);
  auto functors = [](const SkewInstance& inst) {
    std::vector<SetFunctor> s;
    for (const auto& n : inst.samples) s.push_back(n.functor);
    return s;
  };
  for (const auto& inst : instances) {
    const auto S = functors(inst);
    auto r = check_coherence(inst.ctx, S[1], S[2], S[3], S[0]);
    SuiteCheck c = from_checked("coherence", inst.name, r);
    if (r.ok())
      for (int n : r.value().checked) c.count += n;
    out.checks.push_back(std::move(c));

    const NormalityReport n = normality_report(inst.ctx, S);
    SuiteCheck nc{"normality", inst.name, std::nullopt, 0, {}, false};
    nc.note = std::string("ff=") + (n.fully_faithful ? "yes" : "no") + " dense=" + (n.dense ? "yes" : "no") +
              " rho-iso=" + (n.rho_invertible ? "yes" : "no") + " lambda-iso=" + (n.lambda_invertible ? "yes" : "no") +
              " gamma-iso=" + (n.gamma_invertible ? "yes" : "no");
    if (!n.consistent())
      nc.verdict = Violation{"NormalityMismatch", n.rho_witness.empty() ? n.lambda_witness : n.rho_witness};
    out.checks.push_back(std::move(nc));
  }
  const std::pair<SkewMutation, const char*> mutations[] = {{SkewMutation::gamma_swap, "gamma-swap"},
                                                            {SkewMutation::gamma_shift, "gamma-shift"},
                                                            {SkewMutation::lambda_shift, "lambda-shift"},
                                                            {SkewMutation::rho_shift, "rho-shift"}};
  for (const auto& [m, label] : mutations) {
    SuiteCheck c{std::string("mutation ") + label, "skew corpus", Violation{"MutationNotCaught", label}, 0, {}, false};
    for (const auto& inst : instances) {
      SkewContext ctx = inst.ctx;
      ctx.mutation = m;
      const auto S = functors(inst);
      auto r = check_coherence(ctx, S[1], S[2], S[3], S[0]);
      if (!r.ok()) {
        c.verdict.reset();
        c.note = "caught on " + inst.name + ": " + r.violation().str();
        break;
      }
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

SuiteResult isbell_suite(const std::vector<corpus::NamedCat>& cats,
                         const std::vector<corpus::NamedFunctor>& functors, const SuiteOptions& opt) {
  SuiteResult out{"isbell", {}};
  for (const auto& [name, A] : cats) {
    const IsbellSamples s = isbell_samples(A, opt.seed);
    auto adj = isbell_adjunction_check(A, s);
    SuiteCheck c = from_checked("adjunction", name, adj);
    if (adj.ok()) c.count = adj.value().elements;
    out.checks.push_back(std::move(c));

    SuiteCheck sd{"representables-self-dual", name, std::nullopt, 0, {}, false};
    for (int a = 0; a < A->num_objects() && !sd.verdict; ++a) {
      if (!self_duality_check(A, yoneda(A, a)).self_dual) sd.verdict = Violation{"NotSelfDual", "y(" + A->object_name(a) + ")"};
      else if (!self_duality_check(A, corep(A, a)).self_dual) sd.verdict = Violation{"NotSelfDual", "z(" + A->object_name(a) + ")"};
      else sd.count += 2;
    }
    out.checks.push_back(std::move(sd));

    SuiteCheck route{"O-via-extension", name, std::nullopt, 0, {}, false};
    for (const auto& F : s.presheaves) {
      auto r = check_O_via_extension(A, F.functor);
      if (!r.ok()) {
        route.verdict = Violation{r.violation().kind, F.name + ": " + r.violation().witness};
        break;
      }
      route.count += r.value();
    }
    out.checks.push_back(std::move(route));

    SuiteCheck sroute{"Spec-via-extension", name, std::nullopt, 0, {}, false};
    for (const auto& G : s.copresheaves) {
      auto r = check_Spec_via_extension(A, G.value);
      if (!r.ok()) {
        sroute.verdict = Violation{r.violation().kind, G.name + ": " + r.violation().witness};
        break;
      }
      sroute.count += r.value();
    }
    out.checks.push_back(std::move(sroute));

    SuiteCheck tri{"triangles", name, std::nullopt, 0, {}, false};
    int fixed = 0;
    for (const auto& F : s.presheaves)
      for (const auto& G : s.copresheaves) {
        if (tri.verdict) break;
        if (auto v = check_isbell_triangles(A, F.functor, G.value))
          tri.verdict = Violation{v->kind, F.name + "," + G.name + ": " + v->witness};
        else
          ++tri.count;
      }
    for (const auto& G : s.copresheaves) fixed += spec_is_fixed(A, G.value);
    tri.note = std::to_string(fixed) + "/" + std::to_string(s.copresheaves.size()) + " copresheaf samples fixed by Spec O";
    out.checks.push_back(std::move(tri));

    std::vector<FinFunctor> out_of_A;
    for (const auto& [fn, f] : functors)
      if (same_category(f.dom, A)) out_of_A.push_back(f);
    SuiteCheck amb{"ambidextrous", name, std::nullopt, 0, {}, false};
    for (const auto& item : ambidextrous_pairing_check(A, out_of_A, s.copresheaves)) {
      if (item.verdict) {
        amb.verdict = Violation{item.verdict->kind, item.check + " " + item.subject + ": " + item.verdict->witness};
        break;
      }
      ++amb.count;
    }
    out.checks.push_back(std::move(amb));
  }
  return out;
}

}  // namespace fcat
