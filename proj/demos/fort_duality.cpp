// Reads graph6 lines from stdin and shows, for each graph, the minimal forts
// and the minimum forcing sets under both rules — a set is forcing exactly
// when it intersects every fort.
//
//   echo 'DQc' | ./demo_fort_duality

#include <iostream>
#include <string>

#include "forcinglab/forts.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/search.hpp"

int main() {
  using namespace forcinglab;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    const Graph g = from_graph6(line);
    std::cout << line << "  (n=" << g.order() << ")\n";
    for (Rule rule : {Rule::standard, Rule::psd}) {
      const FortFamily forts = enumerate_forts(g, rule);
      const auto [minimum, minimal] = enumerate_forcing_families(g, rule);
      std::cout << "  " << rule_name(rule) << ": " << forts.forts.size()
                << " minimal forts, Z=" << minimum.min_cardinality() << "\n    forts:";
      for (VertexSet f : forts.forts) std::cout << ' ' << f.to_string();
      std::cout << "\n    minimum sets:";
      for (VertexSet b : minimum.sets) std::cout << ' ' << b.to_string();
      std::cout << '\n';
    }
  }
  return 0;
}
