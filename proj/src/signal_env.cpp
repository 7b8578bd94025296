#include "synk/signal_env.hpp"

#include "synk/error.hpp"

namespace synk {

void SignalEnv::declare(const std::string& name, SignalKind kind) {
  auto [it, inserted] = records_.try_emplace(name, SignalRecord{kind, false, false});
  if (!inserted && it->second.kind != kind) {
    throw Error(ErrorCode::KindMismatch, "signal '" + name + "' declared as " +
                                             std::string(to_string(it->second.kind)) + " and " +
                                             std::string(to_string(kind)));
  }
}

const SignalRecord& SignalEnv::at(const std::string& name) const {
  auto it = records_.find(name);
  if (it == records_.end()) {
    throw Error(ErrorCode::UnboundSignal, "signal '" + name + "' is not bound");
  }
  return it->second;
}

bool SignalEnv::prev(const std::string& name) const {
  ++prev_reads_;
  return at(name).prev;
}

bool SignalEnv::curr(const std::string& name) const {
  ++curr_reads_;
  return at(name).curr;
}

void SignalEnv::set_curr(const std::string& name) {
  auto it = records_.find(name);
  if (it == records_.end()) {
    throw Error(ErrorCode::UnboundSignal, "signal '" + name + "' is not bound");
  }
  it->second.curr = true;
}

void SignalEnv::end_of_tick() {
  for (auto& [name, rec] : records_) {
    rec.prev = rec.curr;
    rec.curr = false;
  }
}

void SignalEnv::merge_from(const SignalEnv& other) {
  for (const auto& [name, rec] : other.records_) {
    auto [it, inserted] = records_.try_emplace(name, rec);
    if (!inserted) {
      if (it->second.kind != rec.kind) {
        throw Error(ErrorCode::KindMismatch, "signal '" + name + "' merged with a different kind");
      }
      it->second.curr = it->second.curr || rec.curr;
    }
  }
}

std::set<std::string> SignalEnv::present(SignalKind kind) const {
  std::set<std::string> out;
  for (const auto& [name, rec] : records_) {
    if (rec.kind == kind && rec.curr) out.insert(name);
  }
  return out;
}

bool operator==(const SignalEnv& a, const SignalEnv& b) {
  if (a.records_.size() != b.records_.size()) return false;
  for (auto ia = a.records_.begin(), ib = b.records_.begin(); ia != a.records_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.kind != ib->second.kind ||
        ia->second.curr != ib->second.curr || ia->second.prev != ib->second.prev) {
      return false;
    }
  }
  return true;
}

SignalEnv declare(SignalEnv env, const std::string& name, SignalKind kind) {
  env.declare(name, kind);
  return env;
}

SignalEnv end_of_tick(SignalEnv env) {
  env.end_of_tick();
  return env;
}

bool evaluate_prev(const SigExpr& expr, const SignalEnv& env) {
  return evaluate(expr, [&](const std::string& name) { return env.prev(name); });
}

}  // namespace synk
