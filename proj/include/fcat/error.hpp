#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace fcat {

/// Input or precondition error. `kind` is the stable machine-readable tag
/// (e.g. "IdentityLawBroken"), `witness` names the offending ids.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string witness)
      : std::runtime_error(kind + "(" + witness + ")"),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::string witness_;
};

/// A failed check with a finite witness. Checks report these as values;
/// only malformed input throws.
struct Violation {
  std::string kind;
  std::string witness;

  std::string str() const { return kind + "(" + witness + ")"; }
  bool operator==(const Violation&) const = default;
};

template <class T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}
  Checked(Violation violation) : v_(std::move(violation)) {}

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) throw Error(violation().kind, violation().witness);
    return std::get<0>(v_);
  }
  const Violation& violation() const { return std::get<1>(v_); }

 private:
  std::variant<T, Violation> v_;
};

/// Result of a check that produces no value.
using Verdict = std::optional<Violation>;

}  // namespace fcat
