#ifndef ALGEBROID_REPRODUCE_HPP
#define ALGEBROID_REPRODUCE_HPP

#include <string>
#include <vector>

namespace algd {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// The paper-reproduction suite behind the `reproduce` subcommand; one entry
/// per acceptance criterion, every tolerance exact.
std::vector<CriterionResult> run_acceptance(unsigned seed = 0);

std::string acceptance_table(const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace algd

#endif
