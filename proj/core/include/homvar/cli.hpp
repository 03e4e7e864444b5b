#pragma once

#include "homvar/variational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace homvar {

// A problem declaration "m=<int> n=<int> k=<int> L = <expr>".
struct ProblemDecl {
    int m = 0;
    int n = 0;
    int k = 0;
    RatExpr lagrangian;

    Lagrangian to_lagrangian() const { return {m, n, k, lagrangian}; }
};

// Parses and validates a declaration. Throws SyntaxError with position
// information for malformed input and IndexOutOfRange when a variable index
// leaves the declared ranges (alpha > n, wrong slot count, or jet order
// above k).
ProblemDecl parse_problem(const std::string& text);

struct RunOptions {
    std::optional<int> q;
    int max_q = 12;
    int max_terms = 200;
    std::uint64_t seed = 20260809;
    bool want_json = false;
};

struct RunResult {
    int exit_code = 0;  // 0 iff every asserted check in the run holds
    std::string text;
    std::string json;
};

// Dispatches one CLI command. Commands that need a problem declaration throw
// std::invalid_argument when none is supplied; unknown commands as well.
//
//   check-homogeneous, hilbert, euler-lagrange, theta, verify-recovery,
//   verify-closure, verify-identities, verify-lemmas
RunResult run_command(const std::string& command,
                      const std::optional<ProblemDecl>& decl,
                      const RunOptions& options);

}  // namespace homvar
