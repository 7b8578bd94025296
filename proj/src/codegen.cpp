#include "synk/codegen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "synk/error.hpp"
#include "synk/optimize.hpp"

namespace synk {

std::string_view to_string(IoMode mode) {
  return mode == IoMode::TraceStdio ? "trace-stdio" : "extern";
}

IoMode parse_io_mode(std::string_view text) {
  if (text == "trace-stdio") return IoMode::TraceStdio;
  if (text == "extern") return IoMode::Extern;
  throw Error(ErrorCode::InternalError, "unknown io mode '" + std::string(text) + "'");
}

std::size_t count_transition_functions(const Fsm& fsm) {
  std::size_t n = 1;  // root I
  for (const Node& node : fsm.graph.nodes()) {
    if (node.live && node.is_state()) ++n;
  }
  return n;
}

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "alignas", "alignof", "and", "and_eq", "asm", "auto", "bitand", "bitor", "bool", "break",
      "case", "catch", "char", "char8_t", "char16_t", "char32_t", "class", "compl", "concept",
      "const", "consteval", "constexpr", "constinit", "const_cast", "continue", "co_await",
      "co_return", "co_yield", "decltype", "default", "delete", "do", "double", "dynamic_cast",
      "else", "enum", "explicit", "export", "extern", "false", "float", "for", "friend", "goto",
      "if", "inline", "int", "long", "mutable", "namespace", "new", "noexcept", "not", "not_eq",
      "nullptr", "operator", "or", "or_eq", "private", "protected", "public", "register",
      "reinterpret_cast", "requires", "return", "short", "signed", "sizeof", "static",
      "static_assert", "static_cast", "struct", "switch", "template", "this", "thread_local",
      "throw", "true", "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
      "virtual", "void", "volatile", "wchar_t", "while", "xor", "xor_eq",
      // names the emitted program defines or includes
      "I", "E", "State", "main", "std", "SYNK_INLINE", "printf", "puts", "putchar", "fgets",
      "stdin", "stdout", "stderr", "string", "variant", "visit", "tick"};
  return words;
}

class Emitter {
 public:
  Emitter(const Fsm& fsm, const CodegenOptions& opts) : fsm_(fsm), g_(fsm.graph), opts_(opts) {
    for (const auto& s : fsm.signals) {
      if (s.kind == SignalKind::Input) inputs_.push_back(s.name);
      if (s.kind == SignalKind::Output) outputs_.push_back(s.name);
    }
    std::sort(inputs_.begin(), inputs_.end());
    std::sort(outputs_.begin(), outputs_.end());
    name_states();
  }

  std::string run() {
    prologue();
    signals();
    states();
    threads();
    forward_decls();
    ticks();
    enters();
    resets_and_visits();
    main_loop();
    return out_.str();
  }

 private:
  void name_states() {
    std::set<std::string> used = {"I", "E"};
    for (const auto& s : fsm_.signals) {
      used.insert("signal_" + s.name);
      used.insert(s.name + "_curr");
      used.insert(s.name + "_prev");
    }
    for (const Node& n : g_.nodes()) {
      if (!n.live || !n.is_state()) continue;
      std::string name = n.label;
      bool bad = reserved_words().count(name) != 0 || name.rfind('_', 0) == 0 ||
                 name.find("__") != std::string::npos || name.rfind("Thread", 0) == 0 ||
                 name.rfind("enter_n", 0) == 0 || name.rfind("reset_g", 0) == 0 ||
                 name.rfind("visit", 0) == 0 || name.rfind("st", 0) == 0 ||
                 name.rfind("init", 0) == 0 || name.rfind("synk_", 0) == 0;
      if (bad) name = "L_" + name;
      while (used.count(name) != 0) name += "_" + std::to_string(n.id);
      used.insert(name);
      state_type_[n.id] = name;
      state_order_.push_back(n.id);
    }
  }

  std::string thread_type(ThreadId t, const std::string& st) const {
    return "Thread" + std::to_string(t) + "<" + st + ">";
  }
  std::string st_var(ThreadId t) const { return "st" + std::to_string(t); }

  std::string expr(const SigExpr& e) const {
    switch (e.op) {
      case SigExpr::Op::Ref: return e.name + "_prev.status";
      case SigExpr::Op::Not: return "(not " + expr(*e.lhs) + ")";
      case SigExpr::Op::And: return "(" + expr(*e.lhs) + " and " + expr(*e.rhs) + ")";
      case SigExpr::Op::Or: return "(" + expr(*e.lhs) + " or " + expr(*e.rhs) + ")";
    }
    return "false";
  }

  // `done` names a local bool holding the join status, when needed.
  std::string guard(const Guard& gd, const std::string& done = {}) const {
    std::string s = gd.sig ? expr(*gd.sig) : std::string();
    if (gd.join != JoinKind::None) {
      std::string j = gd.join == JoinKind::AllDone ? done : "(not " + done + ")";
      s = s.empty() ? j : s + " and " + j;
    }
    return s.empty() ? "true" : s;
  }

  void actions(const std::vector<Action>& acts, const std::string& indent) {
    for (const auto& a : acts) {
      if (a.kind == Action::Kind::Emit) {
        out_ << indent << a.name << "_curr.status = true;\n";
      } else {
        out_ << indent << "// " << to_string(a.signal_kind) << " signal " << a.name << "\n";
      }
    }
  }

  // Code taking `e` from a node of thread `t`.
  void take(const Edge& e, ThreadId t, const std::string& indent) {
    actions(e.actions, indent);
    if (g_.node(e.dst).thread != t) {
      // Abort edge to an enclosing thread: this thread just ends; the owner's
      // matching edge makes the jump.
      out_ << indent << st_var(t) << " = " << thread_type(t, "E") << "{};\n";
    } else {
      out_ << indent << "enter_n" << e.dst << "();\n";
    }
  }

  void chain(const std::vector<const Edge*>& edges, ThreadId t, const std::string& indent) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = *edges[i];
      out_ << indent << (i == 0 ? "if (" : "} else if (") << guard(e.guard) << ") {\n";
      take(e, t, indent + "  ");
    }
    if (!edges.empty()) out_ << indent << "}\n";
  }

  void prologue() {
    out_ << "// Generated by synkc. Type-state encoding of a synchronous program.\n";
    out_ << "#include <cstdio>\n#include <cstring>\n#include <variant>\n";
    out_ << "\n#define SYNK_INLINE inline __attribute__((always_inline))\n\n";
  }

  void signals() {
    out_ << "// Sig decls\n";
    for (const auto& s : fsm_.signals) {
      out_ << "typedef struct signal_" << s.name << " { bool status; } signal_" << s.name << ";\n";
      out_ << "static signal_" << s.name << " " << s.name << "_curr, " << s.name << "_prev;\n";
    }
    out_ << "\n";
  }

  void states() {
    out_ << "// Decl states\nstruct State {};\nstruct I : State {};\nstruct E : State {};\n";
    for (NodeId n : state_order_) out_ << "struct " << state_type_.at(n) << " : State {};\n";
    out_ << "\n";
  }

  void threads() {
    const auto& tt = fsm_.threads.threads();
    for (const auto& t : tt) {
      out_ << "template <class St> struct Thread" << t.id << " {\n  void tick() const {}\n};\n";
    }
    out_ << "\n";
    for (const auto& t : tt) {
      out_ << "using Thread" << t.id << "State = std::variant<" << thread_type(t.id, "I");
      for (NodeId n : state_order_) {
        if (g_.node(n).thread == t.id) out_ << ", " << thread_type(t.id, state_type_.at(n));
      }
      out_ << ", " << thread_type(t.id, "E") << ">;\n";
    }
    for (const auto& t : tt) out_ << "static Thread" << t.id << "State " << st_var(t.id) << ";\n";
    out_ << "\n";
  }

  void forward_decls() {
    for (const Node& n : g_.nodes()) {
      if (n.live) out_ << "[[maybe_unused]] static void enter_n" << n.id << "();\n";
    }
    for (const auto& grp : fsm_.threads.groups()) {
      out_ << "static void reset_g" << grp.id << "();\n";
      out_ << "static bool all_done_g" << grp.id << "();\n";
    }
    for (const auto& t : fsm_.threads.threads()) out_ << "static void visit" << t.id << "();\n";
    out_ << "\n";
  }

  void ticks() {
    out_ << "// Transition functions, one per (thread, state)\n";
    out_ << "template <> void " << thread_type(0, "I") << "::tick() const {\n";
    out_ << "  enter_n" << fsm_.init() << "();\n}\n";
    for (NodeId id : state_order_) {
      const Node& n = g_.node(id);
      out_ << "template <> void " << thread_type(n.thread, state_type_.at(id)) << "::tick() const {\n";
      if (auto gid = fsm_.threads.group_of_nd(id)) {
        join_tick(n, *gid);
      } else {
        std::vector<const Edge*> edges;
        for (EdgeId e : n.out) edges.push_back(&g_.edge(e));
        chain(edges, n.thread, "  ");
      }
      out_ << "}\n";
    }
    out_ << "\n";
  }

  void join_tick(const Node& nd, GroupId gid) {
    std::vector<const Edge*> aborts, joins;
    for (EdgeId e : nd.out) {
      const Edge& edge = g_.edge(e);
      (edge.guard.join == JoinKind::None ? aborts : joins).push_back(&edge);
    }
    for (const Edge* e : aborts) {
      out_ << "  if (" << guard(e->guard) << ") {\n    reset_g" << gid << "();\n";
      take(*e, nd.thread, "    ");
      out_ << "    return;\n  }\n";
    }
    for (ThreadId m : fsm_.threads.group(gid).members) out_ << "  visit" << m << "();\n";
    out_ << "  const bool done = all_done_g" << gid << "();\n";
    for (std::size_t i = 0; i < joins.size(); ++i) {
      const Edge& e = *joins[i];
      out_ << "  " << (i == 0 ? "if (" : "} else if (") << guard(e.guard, "done") << ") {\n";
      if (e.dst == nd.id && e.actions.empty()) {
        out_ << "    // wait\n";
      } else {
        out_ << "    reset_g" << gid << "();\n";
        take(e, nd.thread, "    ");
      }
    }
    if (!joins.empty()) out_ << "  }\n";
  }

  void enters() {
    out_ << "// Instantaneous traversal\n";
    for (const Node& n : g_.nodes()) {
      if (!n.live) continue;
      out_ << "static void enter_n" << n.id << "() {\n";
      const ThreadInfo& t = fsm_.threads.thread(n.thread);
      if (n.id == t.end) {
        out_ << "  " << st_var(n.thread) << " = " << thread_type(n.thread, "E") << "{};\n";
      } else if (n.is_state()) {
        out_ << "  " << st_var(n.thread) << " = " << thread_type(n.thread, state_type_.at(n.id))
             << "{};\n";
      } else if (auto gid = fsm_.threads.group_of_fork(n.id)) {
        fork_body(n, *gid);
      } else {
        std::vector<const Edge*> edges;
        for (EdgeId e : n.out) edges.push_back(&g_.edge(e));
        chain(edges, n.thread, "  ");
      }
      out_ << "}\n";
    }
    out_ << "\n";
  }

  void fork_body(const Node& f, GroupId gid) {
    const ParGroup& grp = fsm_.threads.group(gid);
    out_ << "  reset_g" << gid << "();\n";
    for (ThreadId m : grp.members) {
      std::vector<const Edge*> edges;
      for (EdgeId e : f.out) {
        if (g_.node(g_.edge(e).dst).thread == m) edges.push_back(&g_.edge(e));
      }
      chain(edges, m, "  ");
    }
    const Node& nd = g_.node(grp.nd);
    const Edge* exit = nullptr;
    for (EdgeId e : nd.out) {
      if (g_.edge(e).guard.join == JoinKind::AllDone) {
        exit = &g_.edge(e);
        break;
      }
    }
    out_ << "  if (all_done_g" << gid << "()) {\n";
    if (exit) {
      out_ << "    reset_g" << gid << "();\n";
      take(*exit, f.thread, "    ");
    }
    out_ << "  } else {\n    " << st_var(f.thread) << " = "
         << thread_type(f.thread, state_type_.at(nd.id)) << "{};\n  }\n";
  }

  void resets_and_visits() {
    for (const auto& grp : fsm_.threads.groups()) {
      out_ << "static void reset_g" << grp.id << "() {\n";
      for (ThreadId m : grp.members) {
        for (GroupId owned : fsm_.threads.groups_owned_by(m)) out_ << "  reset_g" << owned << "();\n";
        out_ << "  " << st_var(m) << " = " << thread_type(m, "I") << "{};\n";
      }
      out_ << "}\n";
      out_ << "static bool all_done_g" << grp.id << "() {\n  return true";
      for (ThreadId m : grp.members) {
        out_ << "\n      and std::holds_alternative<" << thread_type(m, "E") << ">(" << st_var(m)
             << ")";
      }
      out_ << ";\n}\n";
    }
    for (const auto& t : fsm_.threads.threads()) {
      out_ << "static SYNK_INLINE void visit" << t.id << "() {\n";
      out_ << "  Thread" << t.id << "State ts = " << st_var(t.id) << ";\n";
      out_ << "  std::visit([](auto&& s) { s.tick(); }, ts);\n}\n";
    }
    out_ << "\n";
  }

  void end_of_tick() {
    for (const auto& s : fsm_.signals) {
      out_ << "    " << s.name << "_prev = " << s.name << "_curr;\n";
      out_ << "    " << s.name << "_curr.status = false;\n";
    }
  }

  void main_loop() {
    out_ << "static void init0() { visit0(); }\n\n";
    out_ << "static bool terminated() { return std::holds_alternative<" << thread_type(0, "E")
         << ">(st0); }\n\n";
    if (opts_.io_mode == IoMode::TraceStdio) {
      stdio_main();
    } else {
      extern_main();
    }
  }

  void stdio_main() {
    out_ << "static bool set_input([[maybe_unused]] const char* name) {\n";
    for (const auto& in : inputs_) {
      out_ << "  if (std::strcmp(name, \"" << in << "\") == 0) { " << in
           << "_curr.status = true; return true; }\n";
    }
    out_ << "  return false;\n}\n\n";
    out_ << "// Reads one tick of the trace; false at end of input.\n";
    out_ << "static bool read_tick(bool& bad) {\n";
    out_ << "  static char line[4096];\n";
    out_ << "  while (std::fgets(line, sizeof line, stdin)) {\n";
    out_ << "    if (line[0] == '#') continue;\n";
    out_ << "    char* p = line;\n";
    out_ << "    for (;;) {\n";
    out_ << "      while (*p == ' ' || *p == '\\t' || *p == '\\r' || *p == '\\n') ++p;\n";
    out_ << "      if (!*p) break;\n";
    out_ << "      char* w = p;\n";
    out_ << "      while (*p && *p != ' ' && *p != '\\t' && *p != '\\r' && *p != '\\n') ++p;\n";
    out_ << "      char saved = *p;\n";
    out_ << "      *p = '\\0';\n";
    out_ << "      if (std::strcmp(w, \"-\") != 0 && !set_input(w)) {\n";
    out_ << "        std::fprintf(stderr, \"unknown input signal '%s'\\n\", w);\n";
    out_ << "        bad = true;\n";
    out_ << "      }\n";
    out_ << "      *p = saved;\n";
    out_ << "    }\n";
    out_ << "    return true;\n";
    out_ << "  }\n";
    out_ << "  return false;\n}\n\n";
    out_ << "static void print_outputs() {\n  bool any = false;\n";
    for (const auto& o : outputs_) {
      out_ << "  if (" << o << "_curr.status) { std::fputs(any ? \" " << o << "\" : \"" << o
           << "\", stdout); any = true; }\n";
    }
    out_ << "  std::fputs(any ? \"\\n\" : \"-\\n\", stdout);\n}\n\n";
    out_ << "int main() {\n";
    out_ << "  for (unsigned long tick = 1;; ++tick) {\n";
    out_ << "    bool bad = false;\n";
    out_ << "    if (!read_tick(bad) && tick > 1) break;\n";
    out_ << "    if (bad) return 2;\n";
    out_ << "    if (tick == 1) init0(); else visit0();\n";
    out_ << "    print_outputs();\n";
    end_of_tick();
    out_ << "    if (terminated()) break;\n";
    out_ << "  }\n";
    out_ << "  return 0;\n}\n";
  }

  void extern_main() {
    out_ << "extern \"C\" int synk_tick_pending(unsigned long tick);\n";
    out_ << "extern \"C\" unsigned char synk_sample_input(const char* name);\n";
    out_ << "extern \"C\" void synk_set_output(const char* name, unsigned char present);\n";
    out_ << "extern \"C\" void synk_end_tick(unsigned long tick);\n\n";
    out_ << "int main() {\n";
    out_ << "  for (unsigned long tick = 1;; ++tick) {\n";
    out_ << "    if (tick > 1 && !synk_tick_pending(tick)) break;\n";
    for (const auto& in : inputs_) {
      out_ << "    " << in << "_curr.status = synk_sample_input(\"" << in << "\") != 0;\n";
    }
    out_ << "    if (tick == 1) init0(); else visit0();\n";
    for (const auto& o : outputs_) {
      out_ << "    synk_set_output(\"" << o << "\", " << o << "_curr.status ? 1 : 0);\n";
    }
    out_ << "    synk_end_tick(tick);\n";
    end_of_tick();
    out_ << "    if (terminated()) break;\n";
    out_ << "  }\n";
    out_ << "  return 0;\n}\n";
  }

  const Fsm& fsm_;
  const FsmGraph& g_;
  const CodegenOptions& opts_;
  std::vector<std::string> inputs_, outputs_;
  std::map<NodeId, std::string> state_type_;
  std::vector<NodeId> state_order_;
  std::ostringstream out_;
};

}  // namespace

std::string emit_typestate(const Fsm& fsm, const CodegenOptions& opts) {
  for (const auto& d : check_determinism(fsm.graph)) {
    if (d.severity == Severity::Error) {
      throw Error(ErrorCode::UnsupportedGraph, "cannot generate code: " + d.message);
    }
  }
  return Emitter(fsm, opts).run();
}

}  // namespace synk
