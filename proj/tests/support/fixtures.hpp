#pragma once

// Worked-example models shared by the tests and the acceptance runner.

#include "lincomp/model.hpp"

namespace fixtures {

using lincomp::ModelSpec;

// Exchange 1 <-> 2, input 1, output 2, leak 1.
inline ModelSpec exchange_leak1() { return ModelSpec(2, {{1, 2}, {2, 1}}, {1}, {2}, {1}); }
inline ModelSpec exchange_leak2() { return ModelSpec(2, {{1, 2}, {2, 1}}, {1}, {2}, {2}); }
// Single edge 1 -> 2 with both compartments leaking.
inline ModelSpec chain_two_leaks() { return ModelSpec(2, {{1, 2}}, {1}, {2}, {1, 2}); }

// Three-compartment path 1 -> 2 -> 3, input 1, output 3.
inline ModelSpec path3_leak(int leak) { return ModelSpec(3, {{1, 2}, {2, 3}}, {1}, {3}, {leak}); }
inline ModelSpec path3_cycle() { return ModelSpec(3, {{1, 2}, {2, 3}, {3, 2}}, {1}, {3}, {}); }

// Edge 2 -> 1, input = output = 1.
inline ModelSpec small2(int leak) { return ModelSpec(2, {{2, 1}}, {1}, {1}, {leak}); }

// Path 1 -> 2 -> 3 with inputs 1 and 2, output 3.
inline ModelSpec two_input(int leak) { return ModelSpec(3, {{1, 2}, {2, 3}}, {1, 2}, {3}, {leak}); }

// Path 1-2-3-4 with detour 2 -> 5 -> 3, and its shifted form 3 -> 5 -> 4.
inline ModelSpec detour_early() {
  return ModelSpec(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 3}}, {1}, {4}, {});
}
inline ModelSpec detour_late() {
  return ModelSpec(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 4}}, {1}, {4}, {});
}

// Sink pair sharing output 3 and input branch 5 -> 3.
inline ModelSpec sink_a() {
  return ModelSpec(5, {{1, 2}, {1, 4}, {2, 3}, {4, 2}, {5, 3}}, {1, 5}, {3}, {});
}
inline ModelSpec sink_b() {
  return ModelSpec(5, {{1, 2}, {2, 3}, {2, 4}, {4, 3}, {5, 3}}, {1, 5}, {3}, {});
}

// P_n: 1 -> 2 -> ... -> n, input 1, output n, the given leaks.
inline ModelSpec path(int n, std::vector<int> leaks) {
  std::vector<lincomp::Edge> e;
  for (int k = 1; k < n; ++k) e.push_back({k, k + 1});
  return ModelSpec(n, e, {1}, {n}, std::move(leaks));
}

}  // namespace fixtures
