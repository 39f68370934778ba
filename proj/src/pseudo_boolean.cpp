#include "persuasion/pseudo_boolean.hpp"

#include <sstream>

#include "persuasion/error.hpp"

namespace persuasion {

PBFormula encode_pseudo_boolean(const PersuasionInstance& instance) {
  validate(instance);
  PBFormula f;
  f.num_facts = instance.num_facts();
  f.num_outcomes = instance.space.size();
  for (std::size_t i = 0; i < f.num_facts; ++i) f.variable_names.push_back("y_" + std::to_string(i));
  for (std::size_t w = 0; w < f.num_outcomes; ++w) f.variable_names.push_back("x_" + std::to_string(w));

  for (std::size_t w = 0; w < f.num_outcomes; ++w) {
    const std::size_t x = f.outcome_var(w);
    // x_w or some excluding fact is chosen.
    PBConstraint some{{{1, x}}, 1};
    for (std::size_t i = 0; i < f.num_facts; ++i) {
      if (instance.facts[i].contains(w)) continue;
      some.terms.push_back({1, f.fact_var(i)});
      // not (x_w and y_i)
      f.constraints.push_back({{{-1, x}, {-1, f.fact_var(i)}}, -1});
    }
    f.constraints.push_back(std::move(some));
  }

  const BigInt pn = instance.threshold.num();
  const BigInt pd = instance.threshold.den();
  const auto& a = instance.space.scaled_weights();
  PBConstraint threshold{{}, 0};
  PBConstraint positive{{}, 1};
  for (std::size_t w = 0; w < f.num_outcomes; ++w) {
    if (a[w] == 0) continue;
    BigInt c = a[w] * ((instance.focal.contains(w) ? pd : BigInt(0)) - pn);
    if (c != 0) threshold.terms.push_back({std::move(c), f.outcome_var(w)});
    positive.terms.push_back({a[w], f.outcome_var(w)});
  }
  // An empty threshold row reads 0 >= 0 and is dropped.
  if (!threshold.terms.empty()) f.constraints.push_back(std::move(threshold));
  f.constraints.push_back(std::move(positive));
  return f;
}

std::string write_opb(const PBFormula& formula) {
  std::ostringstream out;
  out << "* #variable= " << formula.num_vars() << " #constraint= " << formula.constraints.size() << "\n";
  for (std::size_t v = 0; v < formula.num_vars(); ++v) {
    out << "* x" << (v + 1) << " = " << formula.variable_names[v] << "\n";
  }
  for (const auto& c : formula.constraints) {
    for (const auto& t : c.terms) {
      out << (t.coefficient >= 0 ? "+" : "") << t.coefficient.get_str() << " x" << (t.var + 1) << " ";
    }
    out << ">= " << c.rhs.get_str() << " ;\n";
  }
  return out.str();
}

bool satisfies(const PBFormula& formula, std::span<const char> assignment) {
  if (assignment.size() != formula.num_vars()) {
    throw Error(Errc::length_mismatch, "assignment has " + std::to_string(assignment.size()) + " values, formula has " +
                                           std::to_string(formula.num_vars()) + " variables");
  }
  for (const auto& c : formula.constraints) {
    BigInt lhs = 0;
    for (const auto& t : c.terms) {
      if (assignment[t.var]) lhs += t.coefficient;
    }
    if (lhs < c.rhs) return false;
  }
  return true;
}

Report decode_assignment(const PBFormula& formula, std::span<const char> assignment) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < formula.num_facts && i < assignment.size(); ++i) {
    if (assignment[formula.fact_var(i)]) chosen.push_back(i);
  }
  return Report(std::move(chosen));
}

}  // namespace persuasion
