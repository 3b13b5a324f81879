#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dijlat/rational.hpp"

namespace dijlat {

/// Arc subsets and vertex subsets as bitmasks over the arc/vertex order of
/// the owning digraph. Instances are desk-scale: at most 64 arcs and 32
/// vertices.
using ArcSet = std::uint64_t;
using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxArcs = 64;
inline constexpr std::size_t kMaxVertices = 32;

/// Cap on 2^|V| dicut-shore scans; raise via the --max-vertices CLI flag.
inline constexpr std::size_t kDefaultDicutCap = 20;

struct Arc {
  std::string id;
  int tail;
  int head;
};

/// Directed multigraph with stable arc identities. Loops are rejected at
/// construction (they cross no cut); parallel arcs are allowed.
class Digraph {
 public:
  Digraph(std::vector<std::string> vertex_names, std::vector<Arc> arcs,
          std::optional<IntVec> weights = std::nullopt);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }

  int vertex_index(const std::string& name) const;            // throws if unknown
  std::size_t arc_index(const std::string& id) const;         // throws if unknown
  bool has_weights() const { return weights_.has_value(); }
  const IntVec& weights() const;                               // throws if absent
  IntVec unit_weights() const { return IntVec(arcs_.size(), Int(1)); }

  VertexSet full_vertex_set() const {
    return num_vertices() == kMaxVertices ? ~VertexSet(0)
                                          : (VertexSet(1) << num_vertices()) - 1;
  }
  ArcSet full_arc_set() const {
    return num_arcs() == kMaxArcs ? ~ArcSet(0) : (ArcSet(1) << num_arcs()) - 1;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arc> arcs_;
  std::optional<IntVec> weights_;
};

struct Dicut {
  VertexSet shore;  // U with no entering arc
  ArcSet arcs;      // delta^+(U)
};

ArcSet delta_plus(const Digraph& d, VertexSet u);
ArcSet delta_minus(const Digraph& d, VertexSet u);
inline ArcSet delta_vertex(const Digraph& d, int v) {
  return delta_plus(d, VertexSet(1) << v) | delta_minus(d, VertexSet(1) << v);
}
bool is_dicut_shore(const Digraph& d, VertexSet u);

VertexSet sources(const Digraph& d);
VertexSet sinks(const Digraph& d);

/// Every vertex a source or a sink.
bool is_bipartite_digraph(const Digraph& d);

/// #sinks(u) - #sources(u); rejects digraphs that are not bipartite.
int disc(const Digraph& d, VertexSet u);

bool is_strongly_connected(const Digraph& d);

/// Underlying multigraph connected and bridgeless (parallel arcs count as
/// two edges).
bool is_2ec_underlying(const Digraph& d);

/// All dicuts by scanning the 2^|V| shores, ascending bitmask order.
/// Throws when |V| exceeds the cap.
std::vector<Dicut> enumerate_dicuts(const Digraph& d, std::size_t cap = kDefaultDicutCap);

/// Minimum total weight over all dicuts and the first witness in ascending
/// shore order. Throws when no dicut exists (strongly connected digraph).
std::pair<Int, Dicut> min_dicut(const Digraph& d, const IntVec& weights,
                                std::size_t cap = kDefaultDicutCap);

/// Reversing j makes the digraph strongly connected.
bool is_strengthening_set(const Digraph& d, ArcSet j);

/// j meets every dicut (checked against the enumeration).
bool is_dijoin(const Digraph& d, ArcSet j, std::size_t cap = kDefaultDicutCap);

/// Same predicate as is_dijoin, decided by contracting j and testing strong
/// connectivity; no vertex cap.
bool meets_all_dicuts(const Digraph& d, ArcSet j);

/// Arcs in j get tail/head swapped; ids and order preserved.
Digraph reverse(const Digraph& d, ArcSet j);

}  // namespace dijlat
