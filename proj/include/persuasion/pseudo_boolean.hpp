#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "persuasion/instance.hpp"

namespace persuasion {

struct PBTerm {
  BigInt coefficient;
  std::size_t var;
};

// sum(terms) >= rhs over 0/1 variables.
struct PBConstraint {
  std::vector<PBTerm> terms;
  BigInt rhs;
};

// Variables 0..N-1 are y_i ("fact i is reported"); N..N+|outcomes|-1 are x_w
// ("outcome w survives every reported fact").
struct PBFormula {
  std::size_t num_facts = 0;
  std::size_t num_outcomes = 0;
  std::vector<PBConstraint> constraints;
  std::vector<std::string> variable_names;

  std::size_t num_vars() const noexcept { return num_facts + num_outcomes; }
  std::size_t fact_var(std::size_t i) const noexcept { return i; }
  std::size_t outcome_var(std::size_t w) const noexcept { return num_facts + w; }
};

// Exact integer encoding of the certificate condition. With a_w the weights
// over their common denominator and threshold p = pn/pd:
//   x_w <-> AND_{i : w not in F_i} not y_i
//   sum_w a_w (pd [w in focal] - pn) x_w >= 0
//   sum_w a_w x_w >= 1
// Satisfiable iff the instance has a certificate; zero-coefficient terms
// are dropped.
PBFormula encode_pseudo_boolean(const PersuasionInstance& instance);

// OPB text: "* #variable= V #constraint= C" header, variable map as comments,
// one "+k xJ ... >= b ;" line per constraint with 1-based xJ.
std::string write_opb(const PBFormula& formula);

// assignment[v] is the value of variable v; size must equal num_vars().
bool satisfies(const PBFormula& formula, std::span<const char> assignment);

// Reported facts are the y_i set to 1.
Report decode_assignment(const PBFormula& formula, std::span<const char> assignment);

}  // namespace persuasion
