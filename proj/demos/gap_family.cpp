// Prints the PSD forcing landscape of the gap family: for each k the
// expanded propagation-time set skips values between 2 and 4+k even though
// both ends are realized.
//
//   ./demo_gap_family [max_k]

#include <cstdlib>
#include <iostream>

#include "forcinglab/families.hpp"
#include "forcinglab/search.hpp"

int main(int argc, char** argv) {
  using namespace forcinglab;
  const int max_k = argc > 1 ? std::atoi(argv[1]) : 0;
  for (int k = 0; k <= max_k; ++k) {
    const Graph g = sgap_graph(k);
    const RuleAnalysis a = analyze_rule(g, Rule::psd);
    std::cout << "k=" << k << "  order=" << g.order() << "  Z+=" << a.forcing_number
              << "  Z+^=" << a.upper_forcing_number << "\n  expanded times:";
    for (int t : a.expanded.times) std::cout << ' ' << t;
    std::cout << "\n  gaps:";
    for (int t : a.expanded.gaps) std::cout << ' ' << t;
    std::cout << '\n';
    for (const auto& [time, set] : a.witnesses)
      std::cout << "  time " << time << " via " << set.to_string() << '\n';
  }
  return 0;
}
