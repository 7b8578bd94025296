#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "synk/ast.hpp"
#include "synk/trace.hpp"

namespace synk {

struct GeneratorOptions {
  std::size_t max_depth = 5;   // statement nesting below the declarations
  std::size_t max_pars = 3;    // parallel statements per program
  std::size_t max_signals = 8; // 1-3 inputs, 1-3 outputs, 0-2 locals
};

/// Random program in the kernel language: declarations followed by a body,
/// which may be wrapped in a loop. Loop bodies always pause on every path,
/// so the result passes validation. Pauses are left unlabelled.
StmtPtr generate_program(std::mt19937_64& rng, const GeneratorOptions& options = {});

/// `ticks` random input sets; each input is present with probability
/// `density`.
TickTrace generate_trace(std::mt19937_64& rng, const std::vector<std::string>& inputs,
                         std::size_t ticks, double density = 0.35);

/// Copy of `stmt` with the arms of every parallel statement reversed.
StmtPtr reverse_par_arms(const StmtPtr& stmt);

/// Copy of `stmt` with the arms of every parallel statement shuffled.
StmtPtr shuffle_par_arms(const StmtPtr& stmt, std::mt19937_64& rng);

}  // namespace synk
