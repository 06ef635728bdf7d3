#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilclean/decomposition.hpp"
#include "nilclean/gf2_matrix.hpp"

namespace nilclean {

/// CNF encoding of "p + q = target, p^2 = p, q^k = 0" with q eliminated by
/// the substitution q_ij = target_ij XOR p_ij. Positive literal v means
/// variable v is true; negative means negated. Variables 1..n^2 are the
/// primary entry variables of P listed row-major; varmap records the
/// (row, column) pair (1-based) of each. All auxiliary variables are
/// functionally determined by the primaries, so satisfying assignments
/// correspond one-to-one with decompositions of the target.
struct CnfInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::map<std::pair<int, int>, int> varmap;  // (i, j) 1-based -> variable
  int n = 0;
  int k = 0;
  Gf2Matrix target;

  bool operator==(const CnfInstance&) const = default;
};

struct Assignment {
  std::vector<std::uint8_t> values;  // index var-1; length num_vars

  bool operator==(const Assignment&) const = default;
};

CnfInstance encode(const Gf2Matrix& a, int k);

/// DIMACS text: "c meta"/"c target"/"c varmap" comment lines, then the
/// "p cnf" header and one clause per line. parse_dimacs(to_dimacs(c))
/// reproduces c exactly.
std::string to_dimacs(const CnfInstance& c);
CnfInstance parse_dimacs(const std::string& text);

enum class SolveMode { kFirstSolution, kCountAll, kProveUnsat };
enum class SolveStatus { kSat, kUnsat, kUnknown };

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Assignment> assignment;  // present iff status = sat
  std::uint64_t model_count = 0;         // exact, count-all mode only
  std::uint64_t decisions = 0;           // branch steps taken
};

/// Complete backtracking search with unit propagation. Deterministic:
/// clauses are canonically sorted before solving, branching picks the
/// lowest-index unassigned variable and tries false first, so the first
/// solution is the lexicographically least model. Exceeding the step budget
/// yields status unknown.
SolveResult dpll_solve(const CnfInstance& c, SolveMode mode,
                       std::uint64_t step_budget = 1'000'000'000);

/// Checks that s satisfies c (std::invalid_argument otherwise), reads P from
/// the varmap, forms Q = target + P, and returns the verified decomposition.
/// A satisfying assignment that decodes to an invalid triple signals an
/// encoder bug and raises std::logic_error.
Decomposition decode_and_verify(const CnfInstance& c, const Assignment& s);

struct ExternalSolution {
  bool satisfiable = false;
  Assignment assignment;  // meaningful iff satisfiable
};

/// Parses standard SAT-solver output: an "s SATISFIABLE" or
/// "s UNSATISFIABLE" status line and, for SAT, "v" value lines terminated by
/// literal 0. Variables not mentioned default to false.
ExternalSolution parse_solver_output(const std::string& text, int num_vars);

}  // namespace nilclean
