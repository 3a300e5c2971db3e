#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jordan/errors.hpp"

namespace jordan {

/// Concrete arguments at which an identity failed, with the nonzero residual.
struct Witness {
  std::vector<std::size_t> basis;                   ///< basis indices, when the sweep was over a basis
  std::vector<std::vector<std::string>> arguments;  ///< argument coordinates, row-major
  std::string discrepancy;
};

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::vector<Witness> witnesses;
};

struct ValidatorReport {
  std::string instance;
  std::vector<AxiomResult> axioms;

  [[nodiscard]] bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
  [[nodiscard]] const AxiomResult& axiom(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.name == name) return a;
    throw InvalidInput("no axiom named " + name + " in report for " + instance);
  }
};

/// Witnesses recorded per axiom before the sweep only counts further failures.
inline constexpr std::size_t kDefaultWitnessCap = 5;

/// { instance, axioms: [{name, pass, checked, witnesses: [...]}] }, one line.
std::string report_to_json(const ValidatorReport& report);

}  // namespace jordan
