#include "dijlat/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dijlat {

Digraph::Digraph(std::vector<std::string> vertex_names, std::vector<Arc> arcs,
                 std::optional<IntVec> weights)
    : vertex_names_(std::move(vertex_names)), arcs_(std::move(arcs)), weights_(std::move(weights)) {
  if (vertex_names_.empty()) throw std::invalid_argument("digraph: empty vertex list");
  if (vertex_names_.size() > kMaxVertices) throw std::invalid_argument("digraph: too many vertices");
  if (arcs_.size() > kMaxArcs) throw std::invalid_argument("digraph: too many arcs");
  std::set<std::string> names(vertex_names_.begin(), vertex_names_.end());
  if (names.size() != vertex_names_.size())
    throw std::invalid_argument("digraph: duplicate vertex name");
  std::set<std::string> ids;
  for (const auto& a : arcs_) {
    if (!ids.insert(a.id).second) throw std::invalid_argument("digraph: duplicate arc id " + a.id);
    if (a.tail < 0 || a.head < 0 || std::size_t(a.tail) >= vertex_names_.size() ||
        std::size_t(a.head) >= vertex_names_.size())
      throw std::invalid_argument("digraph: arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("digraph: loop arc " + a.id);
  }
  if (weights_) {
    if (weights_->size() != arcs_.size())
      throw std::invalid_argument("digraph: weight count mismatch");
    for (const auto& w : *weights_)
      if (w < 0) throw std::invalid_argument("digraph: negative arc weight");
  }
}

int Digraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return int(i);
  throw std::invalid_argument("digraph: unknown vertex " + name);
}

std::size_t Digraph::arc_index(const std::string& id) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    if (arcs_[i].id == id) return i;
  throw std::invalid_argument("digraph: unknown arc id " + id);
}

const IntVec& Digraph::weights() const {
  if (!weights_) throw std::logic_error("digraph: no weights present");
  return *weights_;
}

ArcSet delta_plus(const Digraph& d, VertexSet u) {
  ArcSet s = 0;
  for (std::size_t i = 0; i < d.num_arcs(); ++i) {
    const Arc& a = d.arc(i);
    if ((u >> a.tail & 1) && !(u >> a.head & 1)) s |= ArcSet(1) << i;
  }
  return s;
}

ArcSet delta_minus(const Digraph& d, VertexSet u) {
  ArcSet s = 0;
  for (std::size_t i = 0; i < d.num_arcs(); ++i) {
    const Arc& a = d.arc(i);
    if (!(u >> a.tail & 1) && (u >> a.head & 1)) s |= ArcSet(1) << i;
  }
  return s;
}

bool is_dicut_shore(const Digraph& d, VertexSet u) {
  if (u == 0 || u == d.full_vertex_set()) return false;
  return delta_minus(d, u) == 0;
}

VertexSet sources(const Digraph& d) {
  VertexSet has_in = 0, has_out = 0;
  for (const auto& a : d.arcs()) {
    has_out |= VertexSet(1) << a.tail;
    has_in |= VertexSet(1) << a.head;
  }
  return d.full_vertex_set() & ~has_in;
}

VertexSet sinks(const Digraph& d) {
  VertexSet has_out = 0;
  for (const auto& a : d.arcs()) has_out |= VertexSet(1) << a.tail;
  return d.full_vertex_set() & ~has_out;
}

bool is_bipartite_digraph(const Digraph& d) {
  return (sources(d) | sinks(d)) == d.full_vertex_set();
}

int disc(const Digraph& d, VertexSet u) {
  if (!is_bipartite_digraph(d)) throw std::invalid_argument("disc: digraph is not bipartite");
  return std::popcount(u & sinks(d)) - std::popcount(u & sources(d));
}

namespace {

// adjacency reachability from vertex 0, with an optional reversal set and
// an optional direction flip
VertexSet reach(const Digraph& d, ArcSet reversed, bool backward, int start) {
  VertexSet seen = VertexSet(1) << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < d.num_arcs(); ++i) {
      const Arc& a = d.arc(i);
      int t = a.tail, h = a.head;
      if (reversed >> i & 1) std::swap(t, h);
      if (backward) std::swap(t, h);
      if ((seen >> t & 1) && !(seen >> h & 1)) {
        seen |= VertexSet(1) << h;
        grew = true;
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  VertexSet full = d.full_vertex_set();
  return reach(d, 0, false, 0) == full && reach(d, 0, true, 0) == full;
}

bool is_2ec_underlying(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  auto connected_without = [&](std::size_t skip) {
    VertexSet seen = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < d.num_arcs(); ++i) {
        if (i == skip) continue;
        const Arc& a = d.arc(i);
        bool st = seen >> a.tail & 1, sh = seen >> a.head & 1;
        if (st != sh) {
          seen |= (VertexSet(1) << a.tail) | (VertexSet(1) << a.head);
          grew = true;
        }
      }
    }
    return std::popcount(seen) == int(n);
  };
  if (!connected_without(d.num_arcs())) return false;
  for (std::size_t i = 0; i < d.num_arcs(); ++i)
    if (!connected_without(i)) return false;
  return true;
}

std::vector<Dicut> enumerate_dicuts(const Digraph& d, std::size_t cap) {
  if (d.num_vertices() > cap) throw std::invalid_argument("enumerate_dicuts: vertex cap exceeded");
  std::vector<Dicut> out;
  // per-arc masks let each shore be rejected in O(|A|) bit tests
  const VertexSet full = d.full_vertex_set();
  for (VertexSet u = 1; u < full; ++u) {
    bool ok = true;
    ArcSet dp = 0;
    for (std::size_t i = 0; i < d.num_arcs() && ok; ++i) {
      const Arc& a = d.arc(i);
      bool t = u >> a.tail & 1, h = u >> a.head & 1;
      if (h && !t) ok = false;
      else if (t && !h) dp |= ArcSet(1) << i;
    }
    if (ok) out.push_back({u, dp});
  }
  return out;
}

std::pair<Int, Dicut> min_dicut(const Digraph& d, const IntVec& weights, std::size_t cap) {
  if (weights.size() != d.num_arcs()) throw std::invalid_argument("min_dicut: weight size mismatch");
  auto cuts = enumerate_dicuts(d, cap);
  if (cuts.empty()) throw std::invalid_argument("min_dicut: digraph has no dicut");
  bool have = false;
  Int best;
  Dicut witness{};
  for (const auto& c : cuts) {
    Int w(0);
    for (std::size_t i = 0; i < d.num_arcs(); ++i)
      if (c.arcs >> i & 1) w += weights[i];
    if (!have || w < best) {
      have = true;
      best = w;
      witness = c;
    }
  }
  return {best, witness};
}

bool is_strengthening_set(const Digraph& d, ArcSet j) {
  VertexSet full = d.full_vertex_set();
  return reach(d, j, false, 0) == full && reach(d, j, true, 0) == full;
}

bool is_dijoin(const Digraph& d, ArcSet j, std::size_t cap) {
  for (const auto& c : enumerate_dicuts(d, cap))
    if ((c.arcs & j) == 0) return false;
  return true;
}

bool meets_all_dicuts(const Digraph& d, ArcSet j) {
  // contract j, then test strong connectivity of the quotient
  const std::size_t n = d.num_vertices();
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (std::size_t i = 0; i < d.num_arcs(); ++i)
    if (j >> i & 1) comp[find(d.arc(i).tail)] = find(d.arc(i).head);

  // forward/backward reachability over contracted classes from class of 0
  auto creach = [&](bool backward) {
    std::vector<bool> seen(n, false);
    seen[find(0)] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : d.arcs()) {
        int t = find(a.tail), h = find(a.head);
        if (backward) std::swap(t, h);
        if (seen[t] && !seen[h]) {
          seen[h] = true;
          grew = true;
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (find(int(v)) == int(v) && !seen[v]) return false;
    return true;
  };
  return creach(false) && creach(true);
}

Digraph reverse(const Digraph& d, ArcSet j) {
  if (d.num_arcs() < kMaxArcs && (j >> d.num_arcs()) != 0)
    throw std::invalid_argument("reverse: arc set out of range");
  std::vector<Arc> arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (j >> i & 1) std::swap(arcs[i].tail, arcs[i].head);
  std::optional<IntVec> w;
  if (d.has_weights()) w = d.weights();
  return Digraph(d.vertex_names(), std::move(arcs), std::move(w));
}

}  // namespace dijlat
