#include "fcat/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include "fcat/corpus.hpp"
#include "fcat/isbell.hpp"
#include "fcat/kan.hpp"
#include "fcat/presheaf.hpp"
#include "fcat/prof.hpp"
#include "fcat/relmonad.hpp"
#include "fcat/suites.hpp"
#include "json.hpp"

namespace fcat::cli {

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const ReportCheck& c) {
    return c.status == "fail";
  }));
}

int exit_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

// ---------------------------------------------------------------- dumps

namespace {

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string map_line(const FinSet& from, const FinSet& to, const std::vector<int>& table) {
  std::vector<std::string> items;
  for (int i = 0; i < from.size(); ++i) items.push_back(from[i] + " -> " + to[table[i]]);
  return braces(items);
}

}  // namespace

std::vector<std::string> dump_category(const FinCat& c) {
  std::vector<std::string> out{"objects: " + braces(c.tables().objects)};
  for (int f = 0; f < c.num_arrows(); ++f) {
    std::string line = "arrow " + c.arrow_name(f) + ": " + c.object_name(c.src(f)) + " -> " + c.object_name(c.tgt(f));
    if (c.is_identity(f)) line += " (identity)";
    out.push_back(line);
  }
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f = 0; f < c.num_arrows(); ++f)
      if (c.compose(g, f) >= 0 && !c.is_identity(g) && !c.is_identity(f))
        out.push_back("compose " + c.arrow_name(g) + " . " + c.arrow_name(f) + " = " +
                      c.arrow_name(c.compose(g, f)));
  return out;
}

std::vector<std::string> dump_functor(const FinFunctor& f) {
  std::vector<std::string> out;
  for (int x = 0; x < f.dom->num_objects(); ++x)
    out.push_back(f.dom->object_name(x) + " -> " + f.cod->object_name(f.obj[x]));
  for (int u = 0; u < f.dom->num_arrows(); ++u)
    if (!f.dom->is_identity(u))
      out.push_back("arrow " + f.dom->arrow_name(u) + " -> " + f.cod->arrow_name(f.arr[u]));
  return out;
}

std::vector<std::string> dump_set_functor(const SetFunctor& F) {
  const FinCat& C = *F.shape;
  std::vector<std::string> out;
  for (int x = 0; x < C.num_objects(); ++x) out.push_back(C.object_name(x) + " = " + braces(F.sets[x].elems));
  for (int f = 0; f < C.num_arrows(); ++f)
    if (!C.is_identity(f))
      out.push_back("map " + C.arrow_name(f) + " = " + map_line(F.sets[C.src(f)], F.sets[C.tgt(f)], F.maps[f]));
  return out;
}

std::vector<std::string> dump_profunctor(const Profunctor& P) {
  const FinCat& A = *P.src;
  const FinCat& B = *P.dst;
  std::vector<std::string> out;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      out.push_back("(" + A.object_name(a) + ", " + B.object_name(b) + ") = " + braces(P.at(a, b).elems));
  for (int u = 0; u < A.num_arrows(); ++u)
    if (!A.is_identity(u))
      for (int b = 0; b < B.num_objects(); ++b)
        out.push_back("left " + A.arrow_name(u) + " at " + B.object_name(b) + " = " +
                      map_line(P.at(A.tgt(u), b), P.at(A.src(u), b), P.body.maps[P.arrow(u, B.identity(b))]));
  for (int v = 0; v < B.num_arrows(); ++v)
    if (!B.is_identity(v))
      for (int a = 0; a < A.num_objects(); ++a)
        out.push_back("right " + B.arrow_name(v) + " at " + A.object_name(a) + " = " +
                      map_line(P.at(a, B.src(v)), P.at(a, B.tgt(v)), P.body.maps[P.arrow(A.identity(a), v)]));
  return out;
}

// ---------------------------------------------------------------- commands

namespace {

using Words = std::vector<std::string>;

[[noreturn]] void bad(const std::string& kind, const std::string& what) { throw Error(kind, what); }

struct Ctx {
  const dsl::Environment& env;
  const RunOptions& opt;
  const Words& w;
  Report rep;

  const std::string& arg(std::size_t i) const {
    if (i >= w.size()) bad("MissingArgument", w[0] + " needs " + std::to_string(i) + " argument(s)");
    return w[i];
  }
  void arity(std::size_t n) const {
    if (w.size() != n + 1) bad("WrongArity", w[0] + " takes " + std::to_string(n) + " argument(s)");
  }

  Cat category(const std::string& n) const {
    auto it = env.categories.find(n);
    if (it == env.categories.end()) bad("UnresolvedReference", "no category named " + n);
    return it->second;
  }
  const FinFunctor& functor(const std::string& n) const {
    auto it = env.functors.find(n);
    if (it == env.functors.end()) bad("UnresolvedReference", "no functor named " + n);
    return it->second;
  }
  const dsl::Environment::SetValue& set(const std::string& n, std::optional<bool> covariant = std::nullopt) const {
    auto it = env.sets.find(n);
    if (it == env.sets.end()) bad("UnresolvedReference", "no presheaf or copresheaf named " + n);
    if (covariant && it->second.covariant != *covariant)
      bad("ShapeMismatch", n + " is a " + (it->second.covariant ? "copresheaf" : "presheaf"));
    return it->second;
  }
  const Profunctor& prof(const std::string& n) const {
    auto it = env.profunctors.find(n);
    if (it == env.profunctors.end()) bad("UnresolvedReference", "no profunctor named " + n);
    return it->second;
  }
  static int object(const FinCat& c, const std::string& n) {
    if (auto x = c.find_object(n)) return *x;
    bad("UnresolvedReference", n + " is not an object");
  }

  void check(std::string name, std::string subject, const Verdict& v, int count = 0, std::string note = {}) {
    rep.checks.push_back({std::move(name), std::move(subject), v ? "fail" : "pass", v ? v->str() : "", count,
                          std::move(note)});
  }
  template <class T>
  void check(std::string name, std::string subject, const Checked<T>& r, int count = 0) {
    check(std::move(name), std::move(subject), r.ok() ? Verdict{} : Verdict{r.violation()}, count);
  }
  void value(std::string name, std::vector<std::string> lines) { rep.values.push_back({std::move(name), std::move(lines)}); }
};

// ------------------------------------------------------------ single items

void cmd_validate(Ctx& c) {
  c.arity(1);
  const std::string& n = c.w[1];
  const std::string kind = c.env.kind_of(n);
  if (kind.empty()) bad("UnresolvedReference", "nothing named " + n);
  if (auto it = c.env.categories.find(n); it != c.env.categories.end()) {
    c.check("category-laws", n, check_category_laws(it->second->tables()), it->second->num_arrows());
    if (kind == "poset" || kind == "lattice") c.check("poset", n, is_poset(*it->second) ? Verdict{} : Verdict{Violation{"NotAPoset", n}});
    c.value(n, dump_category(*it->second));
    if (auto l = c.env.lattices.find(n); l != c.env.lattices.end()) {
      const FinLattice& L = l->second;
      std::vector<std::string> joins{"bottom = " + L.carrier->object_name(L.bottom),
                                     "top = " + L.carrier->object_name(L.top())};
      for (int a = 0; a < L.size(); ++a)
        for (int b = a + 1; b < L.size(); ++b)
          joins.push_back(L.carrier->object_name(a) + " v " + L.carrier->object_name(b) + " = " +
                          L.carrier->object_name(L.join(a, b)));
      c.check("lattice", n, Verdict{}, L.size());
      c.value(n + " joins", joins);
    }
  } else if (kind == "functor") {
    const FinFunctor& f = c.functor(n);
    c.check("functor-laws", n, check_functor(f), f.dom->num_arrows());
    c.value(n, dump_functor(f));
  } else if (kind == "presheaf" || kind == "copresheaf") {
    const auto& s = c.set(n);
    c.check(kind + "-laws", n, check_set_functor(s.functor), s.functor.total_size());
    c.value(n, dump_set_functor(s.functor));
  } else if (kind == "profunctor") {
    const Profunctor& P = c.prof(n);
    c.check("profunctor-laws", n, check_profunctor(P), P.body.total_size());
    c.value(n, dump_profunctor(P));
  } else if (kind == "adjunction") {
    const auto& a = c.env.adjunctions.at(n);
    const FinFunctor &f = c.functor(a.left), &g = c.functor(a.right);
    auto r = find_adjunction(f, g);
    c.check("zig-zag", n, r);
    if (r.ok()) {
      std::vector<std::string> lines;
      for (int x = 0; x < f.dom->num_objects(); ++x)
        lines.push_back("unit at " + f.dom->object_name(x) + " = " + f.dom->arrow_name(r.value().unit.comp[x]));
      for (int y = 0; y < f.cod->num_objects(); ++y)
        lines.push_back("counit at " + f.cod->object_name(y) + " = " + f.cod->arrow_name(r.value().counit.comp[y]));
      c.value(n, lines);
    }
  }
}

void cmd_hom(Ctx& c) {
  c.arity(3);
  const Cat C = c.category(c.w[1]);
  const int x = Ctx::object(*C, c.w[2]), y = Ctx::object(*C, c.w[3]);
  std::vector<std::string> names;
  for (int f : C->hom(x, y)) names.push_back(C->arrow_name(f));
  c.value("hom(" + c.w[2] + ", " + c.w[3] + ")", {braces(names), "size " + std::to_string(names.size())});
}

void cmd_yoneda(Ctx& c) {
  c.arity(2);
  const Cat A = c.category(c.w[1]);
  const int a = Ctx::object(*A, c.w[2]);
  const SetFunctor y = yoneda(A, a);
  c.value("y(" + c.w[2] + ")", dump_set_functor(y));
  for (const auto& n : c.env.names_of("presheaf")) {
    const auto& s = c.env.sets.at(n);
    if (s.on != c.w[1]) continue;
    auto r = check_yoneda_lemma(A, a, s.functor);
    c.check("yoneda-lemma", n, r, r.ok() ? r.value() : 0);
  }
}

void cmd_nat_hom(Ctx& c) {
  c.arity(2);
  const auto& F = c.set(c.w[1]);
  const auto& G = c.set(c.w[2]);
  if (!same_category(F.functor.shape, G.functor.shape)) bad("ShapeMismatch", c.w[1] + ", " + c.w[2]);
  const auto hom = nat_hom(F.functor, G.functor);
  std::vector<std::string> lines;
  for (const auto& a : hom) lines.push_back(nat_id(G.functor, a));
  lines.push_back("size " + std::to_string(hom.size()));
  c.value("nat(" + c.w[1] + ", " + c.w[2] + ")", lines);
  int natural = 0;
  Verdict v;
  for (const auto& a : hom)
    if ((v = check_nat_family(F.functor, G.functor, a))) break;
    else ++natural;
  c.check("naturality", c.w[1] + ", " + c.w[2], v, natural);
}

void cmd_extension(Ctx& c, bool left) {
  c.arity(2);
  const FinFunctor& f = c.functor(c.w[1]);
  const auto& F = c.set(c.w[2]);
  if (!same_category(c.category(F.on), f.dom))
    bad("ShapeMismatch", c.w[2] + " is not on the domain of " + c.w[1]);
  const FinFunctor K = F.covariant ? f : op_functor(f);
  const ExtensionResult E = left ? lan_set(K, F.functor) : ran_set(K, F.functor);
  c.value(std::string(left ? "lan " : "ran ") + c.w[1] + " " + c.w[2], dump_set_functor(E.extension));
  const SetFunctor terminal = constant_set_functor(K.cod, FinSet{{"*"}});
  for (const auto& [label, G] : {std::pair<const char*, const SetFunctor*>{"self", &E.extension}, {"terminal", &terminal}}) {
    const Verdict v = left ? check_lan_universal(E, K, F.functor, *G) : check_ran_universal(E, K, F.functor, *G);
    c.check(left ? "lan-universal" : "ran-universal", label, v);
  }
}

void cmd_nerve(Ctx& c) {
  c.arity(1);
  const FinFunctor& f = c.functor(c.w[1]);
  const Nerve N = nerve(f);
  c.value("nerve " + c.w[1], dump_profunctor(N.body));
  std::vector<std::string> chi;
  for (int a = 0; a < f.dom->num_objects(); ++a)
    chi.push_back(f.dom->object_name(a) + " -> " + N.body.at(a, f.obj[a])[N.chi[a]]);
  c.value("chi", chi);
  c.check("exhibits-extension", c.w[1], check_exhibits_extension(f, N.body, N.chi), f.dom->num_objects());
}

const Profunctor& endo(Ctx& c, const std::string& n) {
  const Profunctor& P = c.prof(n);
  if (!same_category(P.src, P.dst)) bad("ShapeMismatch", n + " is not an endo-profunctor");
  return P;
}

void cmd_coend(Ctx& c) {
  c.arity(1);
  const Profunctor& P = endo(c, c.w[1]);
  const Colimit K = coend(P.src, P.body);
  auto lines = K.classes.elems;
  lines.push_back("size " + std::to_string(K.num_classes()));
  c.value("coend " + c.w[1], lines);
}

void cmd_end(Ctx& c) {
  c.arity(1);
  const Profunctor& P = endo(c, c.w[1]);
  const Limit L = end(P.src, P.body);
  std::vector<std::string> lines;
  const int n = P.src->num_objects();
  for (const auto& fam : L.families) {
    std::vector<std::string> items;
    for (int a = 0; a < n; ++a) items.push_back(P.src->object_name(a) + ":" + P.body.sets[a * n + a][fam[a]]);
    lines.push_back(braces(items));
  }
  lines.push_back("size " + std::to_string(L.families.size()));
  c.value("end " + c.w[1], lines);
}

void cmd_wcolim(Ctx& c) {
  c.arity(2);
  const auto& W = c.set(c.w[1], false);
  const auto& D = c.set(c.w[2], true);
  if (W.on != D.on) bad("ShapeMismatch", c.w[1] + " and " + c.w[2] + " live on different categories");
  const Cat A = c.category(W.on);
  const WeightedColimit wc = weighted_colim(A, W.functor, D.functor);
  auto lines = wc.colimit.classes.elems;
  lines.push_back("size " + std::to_string(wc.colimit.num_classes()));
  c.value("colim " + c.w[1] + " * " + c.w[2], lines);
  const FinSet probe{{"p", "q"}};
  c.check("weighted-universal", "maps into {p, q}", check_weighted_adjunction(A, W.functor, D.functor, probe));
}

void cmd_compose_prof(Ctx& c) {
  c.arity(2);
  const Profunctor& Q = c.prof(c.w[1]);
  const Profunctor& P = c.prof(c.w[2]);
  if (!same_category(P.dst, Q.src)) bad("ShapeMismatch", c.w[1] + " . " + c.w[2] + " is not composable");
  const Profunctor R = compose_coend(Q, P);
  c.value(c.w[1] + " . " + c.w[2], dump_profunctor(R));
  c.check("profunctor-laws", c.w[1] + " . " + c.w[2], check_profunctor(R), R.body.total_size());
  c.check("left-unit", c.w[2], left_unitor(P));
  c.check("right-unit", c.w[2], right_unitor(P));
}

void cmd_kleisli(Ctx& c) {
  c.arity(2);
  const KleisliCell g = kleisli_cell(c.prof(c.w[1]));
  const KleisliCell f = kleisli_cell(c.prof(c.w[2]));
  if (!same_category(f.dst, g.src)) bad("ShapeMismatch", c.w[1] + " . " + c.w[2] + " is not composable");
  const KleisliCell gf = kleisli_compose(g, f);
  c.value(c.w[1] + " * " + c.w[2], dump_profunctor(gf.body));
  c.check("kleisli-vs-coend", c.w[1] + " * " + c.w[2], kleisli_vs_coend(g, f), gf.body.body.total_size());
}

void cmd_companion(Ctx& c, bool companion_side) {
  c.arity(1);
  const FinFunctor& f = c.functor(c.w[1]);
  const Profunctor P = companion_side ? companion(f) : conjoint(f);
  c.value(std::string(companion_side ? "companion " : "conjoint ") + c.w[1], dump_profunctor(P));
  c.check("companion-adjunction", c.w[1], check_companion_adjunction(f));
}

void cmd_isbell_o(Ctx& c) {
  c.arity(1);
  const auto& F = c.set(c.w[1], false);
  const Cat A = c.category(F.on);
  c.value("O " + c.w[1], dump_set_functor(isbell_O(A, F.functor).value.functor));
  auto r = check_O_via_extension(A, F.functor);
  c.check("O-via-extension", c.w[1], r, r.ok() ? r.value() : 0);
  c.check("self-dual", c.w[1], Verdict{}, 0, self_duality_check(A, F.functor).self_dual ? "unit invertible" : "unit not invertible");
}

void cmd_isbell_spec(Ctx& c) {
  c.arity(1);
  const auto& G = c.set(c.w[1], true);
  const Cat A = c.category(G.on);
  const Copresheaf g{G.functor};
  c.value("Spec " + c.w[1], dump_set_functor(isbell_Spec(A, g).value));
  auto r = check_Spec_via_extension(A, g);
  c.check("Spec-via-extension", c.w[1], r, r.ok() ? r.value() : 0);
  c.check("self-dual", c.w[1], Verdict{}, 0, self_duality_check(A, g).self_dual ? "unit invertible" : "unit not invertible");
}

void cmd_aft(Ctx& c) {
  c.arity(1);
  const FinFunctor& f = c.functor(c.w[1]);
  if (!is_poset(*f.dom) || !is_poset(*f.cod)) bad("NotAPoset", c.w[1] + " is not a map of posets");
  auto r = formal_aft(f);
  const auto oracle = galois_right_adjoint(f);
  Verdict agree;
  if (r.ok() != oracle.has_value() || (oracle && r.value().right.obj != *oracle))
    agree = Violation{"OracleMismatch", c.w[1]};
  if (r.ok()) {
    c.value("right adjoint of " + c.w[1], dump_functor(r.value().right));
    c.check("aft-vs-galois", c.w[1], agree, f.cod->num_objects(), "right adjoint exists");
  } else {
    c.check("aft-vs-galois", c.w[1], agree, f.cod->num_objects(), "no right adjoint: " + r.violation().str());
  }
}

// ------------------------------------------------------------ suites

struct Inputs {
  std::vector<corpus::NamedCat> cats;
  std::vector<corpus::NamedFunctor> functors;
  std::vector<corpus::NamedAdjunction> adjunctions;
};

Inputs gather(const Words& names, const dsl::Environment& env) {
  Inputs in;
  auto add = [&](const std::string& n) {
    if (auto c = env.categories.find(n); c != env.categories.end()) in.cats.push_back({n, c->second});
    else if (auto f = env.functors.find(n); f != env.functors.end()) in.functors.push_back({n, f->second});
    else if (auto a = env.adjunctions.find(n); a != env.adjunctions.end())
      in.adjunctions.push_back({n, env.functors.at(a->second.left), env.functors.at(a->second.right)});
    else if (!env.kind_of(n).empty()) bad("ShapeMismatch", n + " is a " + env.kind_of(n) + "; suites take categories, functors and adjunctions");
    else bad("UnresolvedReference", "nothing named " + n);
  };
  if (env.categories.empty()) {
    Inputs all{corpus::categories(), corpus::functors(), corpus::adjunctions()};
    if (names.empty()) return all;
    for (const auto& n : names) {
      auto named = [&](const auto& x) { return x.name == n; };
      if (auto c = std::find_if(all.cats.begin(), all.cats.end(), named); c != all.cats.end()) in.cats.push_back(*c);
      else if (auto f = std::find_if(all.functors.begin(), all.functors.end(), named); f != all.functors.end())
        in.functors.push_back(*f);
      else if (auto a = std::find_if(all.adjunctions.begin(), all.adjunctions.end(), named); a != all.adjunctions.end())
        in.adjunctions.push_back(*a);
      else bad("UnresolvedReference", "nothing named " + n + " in the built-in corpus");
    }
    return in;
  }
  if (!names.empty()) {
    for (const auto& n : names) add(n);
    return in;
  }
  for (const auto& [kind, n] : env.order)
    if (kind != "presheaf" && kind != "copresheaf" && kind != "profunctor") add(n);
  return in;
}

void add_suite(Ctx& c, const SuiteResult& s) {
  for (const auto& k : s.checks) {
    ReportCheck r{k.check, k.subject, "pass", "", k.count, k.note};
    if (k.skipped) {
      r.status = "skipped";
      r.witness = k.note;
      r.note.clear();
    } else if (k.verdict) {
      r.status = "fail";
      r.witness = k.verdict->str();
    }
    c.rep.checks.push_back(std::move(r));
  }
}

void cmd_suite(Ctx& c) {
  const std::string& name = c.arg(1);
  const Words rest(c.w.begin() + 2, c.w.end());
  SuiteOptions so{c.opt.probe_size, c.opt.seed};
  if (name == "aft") {
    c.arity(1);
    add_suite(c, aft_suite(5));
    return;
  }
  if (name == "skew-coherence") {
    c.arity(1);
    add_suite(c, skew_suite(so));
    return;
  }
  const Inputs in = gather(rest, c.env);
  if (name == "yoneda-axioms") {
    add_suite(c, yoneda_axioms_suite(in.cats, in.functors, so));
  } else if (name == "relmonad-laws") {
    add_suite(c, relmonad_suite(in.cats, so));
  } else if (name == "kleisli") {
    std::vector<corpus::NamedCat> small;
    for (const auto& k : in.cats)
      if (k.cat->num_objects() <= 3) small.push_back(k);
    add_suite(c, kleisli_suite(small, 100, 50, so));
  } else if (name == "equipment") {
    add_suite(c, equipment_suite(in.cats, in.functors, in.adjunctions));
  } else if (name == "main-theorem") {
    add_suite(c, main_theorem_suite(in.cats, so));
  } else if (name == "isbell") {
    add_suite(c, isbell_suite(in.cats, in.functors, so));
  } else {
    bad("UnknownCommand", "suite " + name);
  }
}

using Handler = std::function<void(Ctx&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},
      {"hom", cmd_hom},
      {"yoneda", cmd_yoneda},
      {"nat-hom", cmd_nat_hom},
      {"lan", [](Ctx& c) { cmd_extension(c, true); }},
      {"ran", [](Ctx& c) { cmd_extension(c, false); }},
      {"nerve", cmd_nerve},
      {"coend", cmd_coend},
      {"end", cmd_end},
      {"wcolim", cmd_wcolim},
      {"compose-prof", cmd_compose_prof},
      {"kleisli", cmd_kleisli},
      {"companion", [](Ctx& c) { cmd_companion(c, true); }},
      {"conjoint", [](Ctx& c) { cmd_companion(c, false); }},
      {"isbell-o", cmd_isbell_o},
      {"isbell-spec", cmd_isbell_spec},
      {"aft", cmd_aft},
      {"suite", cmd_suite},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : handlers()) out.push_back(k);
  return out;
}

Report run_command(const Words& words, const dsl::Environment& env, const RunOptions& opt) {
  if (words.empty()) bad("MissingArgument", "no command");
  auto it = handlers().find(words[0]);
  if (it == handlers().end()) bad("UnknownCommand", words[0]);
  std::string echo;
  for (const auto& w : words) echo += (echo.empty() ? "" : " ") + w;
  Ctx c{env, opt, words, Report{echo, {}, {}}};
  it->second(c);
  return std::move(c.rep);
}

std::vector<Report> run_all(const dsl::Environment& env, const RunOptions& opt) {
  std::vector<Report> out;
  for (const auto& [decl, span] : env.runs) {
    Words words;
    for (const auto& n : decl.words) words.push_back(n.text);
    try {
      out.push_back(run_command(words, env, opt));
    } catch (const dsl::DslError&) {
      throw;
    } catch (const Error& e) {
      throw dsl::DslError(dsl::Diagnostic{e.kind(), e.witness(), span, "check the arguments of '" + words[0] + "'", {}});
    }
  }
  return out;
}

// ---------------------------------------------------------------- loading

dsl::Environment load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dsl::DslError(dsl::Diagnostic{"FileNotFound", "cannot read " + path, {}, "check the path", path});
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return dsl::elaborate(dsl::parse_syntax(buf.str()));
  } catch (dsl::DslError& e) {
    dsl::Diagnostic d = e.diagnostic();
    d.file = path;
    throw dsl::DslError(d);
  }
}

dsl::Environment load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw dsl::DslError(dsl::Diagnostic{"FileNotFound", "not a directory: " + dir, {}, "check the path", dir});
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".fcat") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  dsl::Environment env;
  std::map<std::string, dsl::Decl> seen;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      // Files stay self-contained, so a shared item may be repeated verbatim.
      dsl::DslDocument doc;
      for (auto& d : dsl::parse_syntax(buf.str()).decls) {
        const std::string& n = dsl::decl_name(d);
        if (n.empty()) continue;
        auto it = seen.find(n);
        if (it == seen.end()) {
          seen.emplace(n, d);
          doc.decls.push_back(std::move(d));
        } else if (!(it->second == d)) {
          const dsl::SourceSpan at = std::visit(
              [](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, dsl::RunDecl>) return dsl::SourceSpan{};
                else return x.name.span;
              },
              d);
          throw dsl::DslError(dsl::Diagnostic{"DuplicateName", "'" + n + "' is declared differently in another file",
                                              at, "give one of them another name", {}});
        }
      }
      dsl::elaborate_into(env, doc);
    } catch (dsl::DslError& e) {
      dsl::Diagnostic d = e.diagnostic();
      d.file = path;
      throw dsl::DslError(d);
    }
  }
  return env;
}

// ---------------------------------------------------------------- rendering

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "== " << r.command << "\n";
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : r.checks) {
      out << "  " << c.status << std::string(8 - c.status.size(), ' ') << c.check << " " << c.subject;
      if (c.count) out << " [" << c.count << "]";
      if (!c.witness.empty()) out << ": " << c.witness;
      if (!c.note.empty()) out << " (" << c.note << ")";
      out << "\n";
      pass += c.status == "pass";
      fail += c.status == "fail";
      skip += c.status == "skipped";
    }
    for (const auto& v : r.values) {
      out << "  value " << v.name << ":\n";
      for (const auto& l : v.lines) out << "    " << l << "\n";
    }
    out << "  => " << (fail ? "fail" : "pass") << " (" << pass << " passed, " << fail << " failed, " << skip
        << " skipped)\n";
  }
  return out.str();
}

std::string render_json(const std::vector<Report>& reports) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["status"] = exit_code(reports) ? "fail" : "pass";
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json jr;
    jr["command"] = r.command;
    jr["status"] = r.ok() ? "pass" : "fail";
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json jc;
      jc["check"] = c.check;
      jc["subject"] = c.subject;
      jc["status"] = c.status;
      jc["witness"] = c.witness;
      jc["count"] = c.count;
      jc["note"] = c.note;
      checks.push_back(std::move(jc));
    }
    jr["checks"] = std::move(checks);
    ordered_json values = ordered_json::array();
    for (const auto& v : r.values) values.push_back(ordered_json{{"name", v.name}, {"lines", v.lines}});
    jr["values"] = std::move(values);
    list.push_back(std::move(jr));
  }
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string render_error_json(const dsl::Diagnostic& d) {
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["status"] = "input-error";
  doc["diagnostic"] = {{"kind", d.kind}, {"message", d.message}, {"file", d.file},
                       {"line", d.span.line}, {"col", d.span.col}, {"hint", d.hint}};
  return doc.dump(2) + "\n";
}

}  // namespace fcat::cli
