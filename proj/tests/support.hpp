#pragma once

// Shared instance builders and small helpers for the test suites.

#include <random>
#include <string>
#include <vector>

#include "dijlat/digraph.hpp"

namespace dijlat::testing {

inline Digraph p2() {
  return Digraph({"u", "v"}, {{"a1", 0, 1}, {"a2", 0, 1}});
}

inline Digraph k22() {
  return Digraph({"u1", "u2", "v1", "v2"},
                 {{"u1v1", 0, 2}, {"u1v2", 0, 3}, {"u2v1", 1, 2}, {"u2v2", 1, 3}});
}

inline Digraph k23() {
  return Digraph({"u1", "u2", "v1", "v2", "v3"},
                 {{"u1v1", 0, 2},
                  {"u1v2", 0, 3},
                  {"u1v3", 0, 4},
                  {"u2v1", 1, 2},
                  {"u2v2", 1, 3},
                  {"u2v3", 1, 4}});
}

inline Digraph k24() {
  std::vector<std::string> names = {"u1", "u2", "v1", "v2", "v3", "v4"};
  std::vector<Arc> arcs;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 4; ++t)
      arcs.push_back({names[s] + names[2 + t], s, 2 + t});
  return Digraph(names, arcs);
}

inline Digraph cycle3() {
  return Digraph({"a", "b", "c"}, {{"ab", 0, 1}, {"bc", 1, 2}, {"ca", 2, 0}});
}

inline Digraph path2() {
  return Digraph({"a", "b", "c"}, {{"ab", 0, 1}, {"bc", 1, 2}});
}

/// Two K22 gadgets joined in series: sources w1,w2 feed the first gadget's
/// sinks v1,v2 through the 2-arc middle dicut delta+({w1,w2,x1,x2}).
inline Digraph serial_join() {
  std::vector<std::string> names = {"u1", "u2", "v1", "v2", "w1", "w2", "x1", "x2"};
  std::vector<Arc> arcs = {
      {"u1v1", 0, 2}, {"u1v2", 0, 3}, {"u2v1", 1, 2}, {"u2v2", 1, 3},
      {"w1x1", 4, 6}, {"w1x2", 4, 7}, {"w2x1", 5, 6}, {"w2x2", 5, 7},
      {"w1v1", 4, 2}, {"w2v2", 5, 3},
  };
  return Digraph(names, arcs);
}

inline Digraph random_digraph(std::mt19937_64& rng, int max_v = 6, int max_a = 10) {
  std::uniform_int_distribution<int> nv(2, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> na(n, max_a);
  int m = na(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Arc> arcs;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int t = pick(rng), h = pick(rng);
    if (t == h) continue;
    arcs.push_back({"a" + std::to_string(arcs.size()), t, h});
  }
  if (arcs.empty()) arcs.push_back({"a0", 0, 1});
  return Digraph(names, arcs);
}

}  // namespace dijlat::testing
