#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace synk {

using SignalSet = std::set<std::string>;

/// One signal-name set per tick: present inputs when read, emitted outputs
/// when written.
struct TickTrace {
  std::vector<SignalSet> ticks;

  std::size_t size() const { return ticks.size(); }
  friend bool operator==(const TickTrace&, const TickTrace&) = default;
};

/// Outputs of a run, plus the tick at which the program terminated if it did.
struct TraceResult {
  TickTrace outputs;
  std::optional<std::size_t> terminated_at;

  friend bool operator==(const TraceResult&, const TraceResult&) = default;
};

/// Text format: one line per tick, either `-` (empty set) or space-separated
/// signal names; lines starting with `#` are comments; the text must end with
/// a newline. Throws Error(TraceSyntaxError) with the 1-based line number.
TickTrace parse_trace(std::string_view text);

/// Canonical text: names sorted, `-` for empty ticks, newline-terminated.
std::string format_trace(const TickTrace& trace);

/// `tick N: names` lines, for human reading.
std::string format_trace_verbose(const TickTrace& trace);

/// Truncates or pads with empty ticks to exactly `ticks` entries.
TickTrace resize_trace(TickTrace trace, std::size_t ticks);

}  // namespace synk
