#include "synk/trace.hpp"

#include <cctype>

#include "synk/error.hpp"

namespace synk {

namespace {

bool valid_identifier(std::string_view word) {
  if (word.empty()) return false;
  auto c0 = static_cast<unsigned char>(word[0]);
  if (std::isalpha(c0) == 0 && word[0] != '_') return false;
  for (char c : word) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::TraceSyntaxError, "trace line " + std::to_string(line) + ": " + what,
              SourceSpan{0, 0, line, 1});
}

}  // namespace

TickTrace parse_trace(std::string_view text) {
  TickTrace trace;
  if (text.empty()) return trace;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) syntax_error(line_no, "missing final newline");
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line == "-") {
      trace.ticks.emplace_back();
      continue;
    }
    SignalSet tick;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      std::string_view word = line.substr(i, j - i);
      if (!valid_identifier(word)) {
        syntax_error(line_no, "invalid signal name '" + std::string(word) + "'");
      }
      tick.emplace(word);
      i = j;
    }
    if (tick.empty()) syntax_error(line_no, "empty line (use '-' for a tick with no signals)");
    trace.ticks.push_back(std::move(tick));
  }
  return trace;
}

std::string format_trace(const TickTrace& trace) {
  std::string out;
  for (const auto& tick : trace.ticks) {
    if (tick.empty()) {
      out += '-';
    } else {
      bool first = true;
      for (const auto& name : tick) {
        if (!first) out += ' ';
        out += name;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

std::string format_trace_verbose(const TickTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.ticks.size(); ++t) {
    out += "tick " + std::to_string(t + 1) + ":";
    for (const auto& name : trace.ticks[t]) out += " " + name;
    out += '\n';
  }
  return out;
}

TickTrace resize_trace(TickTrace trace, std::size_t ticks) {
  trace.ticks.resize(ticks);
  return trace;
}

}  // namespace synk
