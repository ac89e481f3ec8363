// Walks a few graphs through recognition, exact impropriety and the interval diagram.
#include <iostream>
#include <variant>

#include "implab/implab.hpp"

using namespace implab;

int main() {
  for (const char* name : {"K1,3", "K1,5", "P5", "C5"}) {
    Graph g;
    named::try_parse(name, g);
    std::cout << name << ": ";
    auto rec = is_interval(g);
    if (auto* w = std::get_if<NonIntervalWitness>(&rec)) {
      std::cout << "not interval, " << to_string(w->kind) << "\n";
      continue;
    }
    auto cert = impropriety(g);
    std::cout << "imp " << cert.p << ", wt " << weight_of_graph(g) << "\n" << ascii_diagram(cert.witness_model);
  }

  // One interval bridging two clusters forces eleven containments; without it, two.
  auto clusters = load_fixture_set("instability").front().graph;
  std::cout << "bridged clusters: imp " << impropriety(clusters).p << ", without the bridge "
            << impropriety(delete_vertex(clusters, 15)).p << "\n";
}
