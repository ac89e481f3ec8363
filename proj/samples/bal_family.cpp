// Builds BAL graphs, checks the predicted impropriety, and recovers the spec again.
#include <iostream>
#include <variant>

#include "implab/implab.hpp"

using namespace implab;

int main() {
  const std::vector<BalSpec> specs{
      {2, {named::complete(2)}},
      {1, {named::path(3), named::complete(3), named::complete(3)}},
      {0, {named::complete(3), named::complete(3), named::complete(3)}},
  };
  for (const auto& raw : specs) {
    const BalSpec spec = normalized(raw);
    const auto built = bal_build(spec);
    const auto report = balance_report(built.graph);
    std::cout << "k=" << spec.k << " n=" << built.graph.order() << " predicted " << predicted_imp(spec) << ", imp "
              << report.imp << ", wt " << report.wt << (report.critical ? ", critical" : ", not critical");
    auto back = is_bal_form(built.graph);
    std::cout << (std::holds_alternative<BalSpec>(back) && std::get<BalSpec>(back) == spec ? ", round trip ok\n"
                                                                                            : ", round trip differs\n");
  }
}
