#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fcat/commands.hpp"
#include "fcat/dsl.hpp"
#include "fcat/presheaf.hpp"

using namespace fcat;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(FCAT_SOURCE_DIR "/corpus"))
    if (e.path().extension() == ".fcat") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

dsl::Diagnostic diagnose(const std::string& src) {
  try {
    dsl::parse(src);
  } catch (const dsl::DslError& e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "no diagnostic for:\n" << src;
  return {};
}

}  // namespace

TEST(Dsl, SingleObjectGetsImplicitIdentity) {
  const auto env = dsl::elaborate(dsl::parse_syntax("category One { object x; }"));
  const Cat& c = env.categories.at("One");
  ASSERT_EQ(c->num_objects(), 1);
  ASSERT_EQ(c->num_arrows(), 1);
  EXPECT_EQ(c->arrow_name(0), "id_x");
  EXPECT_EQ(c->compose(0, 0), 0);
}

TEST(Dsl, PosetChainIsClosed) {
  const auto env = dsl::elaborate(dsl::parse_syntax("poset C3 { 0 < 1 < 2 }"));
  const Cat& c = env.categories.at("C3");
  EXPECT_EQ(c->num_arrows(), 6);
  EXPECT_EQ(c->hom(0, 2).size(), 1u);
  EXPECT_TRUE(c->hom(2, 0).empty());
}

TEST(Dsl, UnresolvedObjectPointsAtTheName) {
  const auto d = diagnose("category Bad { object x; arrow f: x -> y; }");
  EXPECT_EQ(d.kind, "UnresolvedReference");
  EXPECT_NE(d.message.find("'y'"), std::string::npos);
  EXPECT_EQ(d.span.line, 1);
  EXPECT_EQ(d.span.col, 40);
  EXPECT_FALSE(d.hint.empty());
}

TEST(Dsl, MissingCompositeIsReported) {
  const auto d = diagnose("category Loop { object x; arrow f: x -> x; }");
  EXPECT_EQ(d.kind, "TableIncomplete");
  EXPECT_NE(d.hint.find("compose f . f"), std::string::npos);
}

TEST(Dsl, DuplicateNamesAreRejected) {
  EXPECT_EQ(diagnose("category A { object x; } category A { object y; }").kind, "DuplicateName");
}

TEST(Dsl, SyntaxErrorHasPosition) {
  const auto d = diagnose("category One {\n  object x\n  arrow f: x -> x;\n}");
  EXPECT_EQ(d.kind, "SyntaxError");
  EXPECT_EQ(d.span.line, 3);
  EXPECT_EQ(d.span.col, 3);
}

TEST(Dsl, BrokenCompositionLawIsReported) {
  const auto d = diagnose(
      "category Z { object *; arrow id: * -> *, s: * -> *; identity * = id; compose s . s = s; compose id . s = id; }");
  EXPECT_FALSE(d.kind.empty());
  EXPECT_NE(d.kind, "SyntaxError");
}

TEST(Dsl, FunctorArrowsAreForced) {
  const auto env = dsl::elaborate(dsl::parse_syntax(R"(
    poset C2 { 0 < 1 }
    poset C3 { 0 < 1 < 2 }
    functor f: C2 -> C3 { 0 -> 0; 1 -> 2; }
  )"));
  const FinFunctor& f = env.functors.at("f");
  EXPECT_FALSE(check_functor(f));
  EXPECT_EQ(f.cod->arrow_name(f.arr[f.dom->arrow("0<=1")]), "0<=2");
}

TEST(Dsl, PresheafMapsCompleteThroughComposites) {
  const auto env = dsl::elaborate(dsl::parse_syntax(R"(
    category Two { object 0, 1; arrow u: 0 -> 1; }
    presheaf F on Two { 0 = {a, b}; 1 = {c}; map u = {c -> a}; }
  )"));
  const auto& F = env.sets.at("F");
  EXPECT_FALSE(F.covariant);
  EXPECT_FALSE(check_set_functor(F.functor));
  EXPECT_EQ(F.functor.sets[0].size(), 2);
}

TEST(Dsl, YonedaOnParsedPresheaf) {
  const auto env = dsl::elaborate(dsl::parse_syntax(R"(
    category Two { object 0, 1; arrow u: 0 -> 1; }
    presheaf F on Two { 0 = {a, b}; 1 = {c}; map u = {c -> a}; }
  )"));
  const Cat& A = env.categories.at("Two");
  for (int a = 0; a < 2; ++a) {
    auto r = check_yoneda_lemma(A, a, env.sets.at("F").functor);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.value(), env.sets.at("F").functor.sets[a].size());
  }
}

TEST(Dsl, RoundTripOnCorpus) {
  for (const auto& p : corpus_files()) {
    SCOPED_TRACE(p.string());
    const dsl::DslDocument doc = dsl::parse(slurp(p));
    const std::string text = dsl::print(doc);
    EXPECT_EQ(dsl::parse_syntax(text), doc);
    EXPECT_EQ(dsl::print(dsl::parse_syntax(text)), text);
  }
}

TEST(Dsl, ReservedWordsAreQuotedWhenPrinted) {
  const auto doc = dsl::parse_syntax("category \"map\" { object \"object\"; }");
  const std::string text = dsl::print(doc);
  EXPECT_NE(text.find("\"object\""), std::string::npos);
  EXPECT_EQ(dsl::parse_syntax(text), doc);
}

TEST(Dsl, ErrorCorpusFailsWithDiagnostics) {
  for (const auto& e : std::filesystem::directory_iterator(FCAT_SOURCE_DIR "/corpus/errors")) {
    SCOPED_TRACE(e.path().string());
    EXPECT_THROW(cli::load_file(e.path().string()), dsl::DslError);
  }
}

TEST(Dsl, CorpusDirectoryMerges) {
  const auto env = cli::load_directory(FCAT_SOURCE_DIR "/corpus");
  EXPECT_EQ(env.kind_of("Two"), "category");
  EXPECT_EQ(env.kind_of("Diamond"), "lattice");
  EXPECT_EQ(env.kind_of("nothing"), "");
}
