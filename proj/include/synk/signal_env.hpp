#pragma once

#include <map>
#include <set>
#include <string>

#include "synk/ast.hpp"

namespace synk {

struct SignalRecord {
  SignalKind kind = SignalKind::Local;
  bool curr = false;
  bool prev = false;
};

/// The input, output and local signal maps, keyed by name. Each record holds
/// the status of the current tick and of the previous one.
class SignalEnv {
 public:
  /// Inserts an absent record with both statuses false. A present record
  /// keeps its statuses. Throws KindMismatch if the kind differs.
  void declare(const std::string& name, SignalKind kind);

  bool contains(const std::string& name) const { return records_.count(name) != 0; }
  const SignalRecord& at(const std::string& name) const;

  /// Status read used by guard evaluation.
  bool prev(const std::string& name) const;
  bool curr(const std::string& name) const;

  /// Sets the current status (emit or input injection). Idempotent.
  void set_curr(const std::string& name);

  /// Copies every current status into the previous one, then clears current.
  void end_of_tick();

  /// ORs the current statuses of `other` into this environment; records only
  /// present in `other` are inserted.
  void merge_from(const SignalEnv& other);

  /// Names of the signals of `kind` whose current status is true.
  std::set<std::string> present(SignalKind kind) const;

  const std::map<std::string, SignalRecord>& records() const { return records_; }

  // Read counters, for checking that reactions only consult `prev`.
  std::size_t prev_reads() const { return prev_reads_; }
  std::size_t curr_reads() const { return curr_reads_; }

  friend bool operator==(const SignalEnv& a, const SignalEnv& b);

 private:
  std::map<std::string, SignalRecord> records_;
  mutable std::size_t prev_reads_ = 0;
  mutable std::size_t curr_reads_ = 0;
};

SignalEnv declare(SignalEnv env, const std::string& name, SignalKind kind);
SignalEnv end_of_tick(SignalEnv env);

/// Evaluates a guard against previous-tick statuses.
bool evaluate_prev(const SigExpr& expr, const SignalEnv& env);

}  // namespace synk
