#include "synk/pipeline.hpp"

#include <stdexcept>

#include "synk/error.hpp"
#include "synk/parser.hpp"

namespace synk {

FrontendResult run_frontend(std::string_view source) {
  FrontendResult out;
  StmtPtr root;
  try {
    root = parse_source(source);
  } catch (const Error& e) {
    Diagnostic d;
    d.code = e.code() == ErrorCode::LexError ? DiagCode::LexError : DiagCode::ParseError;
    d.message = e.what();
    if (e.span()) d.span = *e.span();
    out.diagnostics.push_back(std::move(d));
    return out;
  }
  ValidationResult v = validate(root);
  out.program = std::move(v.program);
  out.diagnostics = std::move(v.diagnostics);
  return out;
}

CheckedAst load_program(std::string_view source, std::string_view file) {
  FrontendResult r = run_frontend(source);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += format_diagnostic(file, d) + "\n";
    throw std::runtime_error(msg);
  }
  return std::move(*r.program);
}

Compiled compile_program(const CheckedAst& program, const RewriteOptions& options) {
  Compiled out;
  out.raw = build_fsm(program, options);
  out.fsm = eliminate_dummies(out.raw);
  out.determinism = check_determinism(out.fsm.graph);
  return out;
}

}  // namespace synk
