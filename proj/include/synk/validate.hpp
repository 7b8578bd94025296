#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synk/ast.hpp"
#include "synk/diagnostics.hpp"

namespace synk {

struct SignalInfo {
  std::string name;
  SignalKind kind = SignalKind::Local;
};

/// A program that passed validation: every pause carries a unique label and
/// every signal reference resolves.
struct CheckedAst {
  StmtPtr root;
  std::vector<SignalInfo> signals;  // declaration order, one entry per name
  std::size_t node_count = 0;
  std::size_t par_count = 0;
  std::vector<Diagnostic> warnings;

  const SignalInfo* find_signal(const std::string& name) const;
  std::vector<std::string> names_of(SignalKind kind) const;
};

struct ValidationResult {
  std::optional<CheckedAst> program;
  std::vector<Diagnostic> diagnostics;  // source order; errors and warnings

  bool ok() const { return program.has_value(); }
};

/// Static checks: loops pause on every path, references resolve to an earlier
/// declaration, pause labels are unique, emits target output/local signals,
/// and a name is never declared with two kinds. Unlabelled pauses receive
/// `S<n>` labels in source order, numbered past the largest user `S<n>`.
ValidationResult validate(const StmtPtr& root);

/// True if some control path through `stmt` completes without pausing.
bool has_instantaneous_path(const Stmt& stmt);

/// False if `stmt` can never complete (for example an unconditional loop).
bool may_terminate(const Stmt& stmt);

}  // namespace synk
