#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fcat/dsl.hpp"

namespace fcat::cli {

struct ReportCheck {
  std::string check;
  std::string subject;
  std::string status;   // pass, fail or skipped
  std::string witness;  // violation for failures, reason for skips
  int count = 0;
  std::string note;
};

struct ReportValue {
  std::string name;
  std::vector<std::string> lines;
};

struct Report {
  std::string command;
  std::vector<ReportCheck> checks;
  std::vector<ReportValue> values;

  int failures() const;
  bool ok() const { return failures() == 0; }
};

struct RunOptions {
  int probe_size = 2;
  std::uint64_t seed = 1;
};

inline constexpr const char* kReportSchema = "fcat-report/1";

/// One command against the environment. `words` is the command and its
/// arguments, e.g. {"hom", "C3", "0", "2"} or {"suite", "isbell", "Two"}.
/// Unknown commands and bad arguments throw Error.
Report run_command(const std::vector<std::string>& words, const dsl::Environment& env, const RunOptions& opt = {});

/// Suites take category, functor and adjunction names as arguments; without
/// arguments they run on everything the environment declares. When it
/// declares no category, names refer to the built-in corpus.
///
/// Every run/suite declaration of the environment in order. Errors are
/// rethrown as DslError at the declaration.
std::vector<Report> run_all(const dsl::Environment& env, const RunOptions& opt = {});

std::vector<std::string> command_names();

/// Every *.fcat file of `dir` in name order, elaborated into one environment.
/// Run lines are dropped; a name declared in several files must be declared
/// identically. Throws DslError with the file name set.
dsl::Environment load_directory(const std::string& dir);

/// Parses and elaborates one file. Throws DslError with the file name set.
dsl::Environment load_file(const std::string& path);

std::string render_text(const std::vector<Report>& reports);
std::string render_json(const std::vector<Report>& reports);
std::string render_error_json(const dsl::Diagnostic& d);

/// 0 when every check passes, 1 otherwise.
int exit_code(const std::vector<Report>& reports);

/// Canonical dumps shared by reports and tests.
std::vector<std::string> dump_category(const FinCat& c);
std::vector<std::string> dump_functor(const FinFunctor& f);
std::vector<std::string> dump_set_functor(const SetFunctor& F);
std::vector<std::string> dump_profunctor(const Profunctor& P);

}  // namespace fcat::cli
