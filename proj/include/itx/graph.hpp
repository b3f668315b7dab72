#pragma once

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "itx/lattice.hpp"

namespace itx {

// One directed edge with a nonnegative integer weight. Parallel edges and
// self-loops are allowed.
struct Edge {
  int tail = 0;
  int head = 0;
  int weight = 0;
};

// Directed multigraph on vertices {0, ..., n-1}, n <= 32 so vertex sets fit a
// SubsetMask.
struct WeightedDigraph {
  int n = 0;
  std::vector<Edge> edges;
};

inline void validate_digraph(const WeightedDigraph& d) {
  require_ground_size(d.n);
  for (const Edge& e : d.edges) {
    if (e.tail < 0 || e.tail >= d.n || e.head < 0 || e.head >= d.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.weight < 0) throw std::invalid_argument("edge weight must be nonnegative");
  }
}

inline int max_edge_weight(const WeightedDigraph& d) {
  int b = 0;
  for (const Edge& e : d.edges) b = std::max(b, e.weight);
  return b;
}

// Same vertices, every edge direction flipped. Walks from s to t in the
// result correspond to walks from t to s in the original, weights unchanged.
inline WeightedDigraph reversed(const WeightedDigraph& d) {
  WeightedDigraph r;
  r.n = d.n;
  r.edges.reserve(d.edges.size());
  for (const Edge& e : d.edges) r.edges.push_back(Edge{e.head, e.tail, e.weight});
  return r;
}

// Subgraph induced by the vertex set `keep`, relabeled to 0..k-1 in ascending
// original order. old_label_of_new maps each new vertex id to its original id.
inline WeightedDigraph induced_subgraph(const WeightedDigraph& d, SubsetMask keep,
                                        std::vector<int>& old_label_of_new) {
  if (d.n < kMaxGroundSize && (keep & ~full_mask(d.n)))
    throw std::invalid_argument("vertex set does not fit the graph");
  old_label_of_new.clear();
  std::vector<int> new_of_old(static_cast<std::size_t>(d.n), -1);
  for (int v = 0; v < d.n; ++v) {
    if (keep >> v & 1u) {
      new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(old_label_of_new.size());
      old_label_of_new.push_back(v);
    }
  }
  WeightedDigraph sub;
  sub.n = static_cast<int>(old_label_of_new.size());
  for (const Edge& e : d.edges) {
    int t = new_of_old[static_cast<std::size_t>(e.tail)];
    int h = new_of_old[static_cast<std::size_t>(e.head)];
    if (t >= 0 && h >= 0) sub.edges.push_back(Edge{t, h, e.weight});
  }
  return sub;
}

// File format: first line "n m", then m lines "tail head weight"; '#' starts
// a comment anywhere.
inline WeightedDigraph parse_digraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](std::istringstream& ls) {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ls.clear();
      ls.str(line);
      return true;
    }
    return false;
  };
  std::istringstream ls;
  if (!next_content_line(ls)) throw std::runtime_error("graph: missing header line");
  long long n, m;
  std::string extra;
  if (!(ls >> n >> m) || (ls >> extra))
    throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'n m' header");
  if (n < 0 || n > kMaxGroundSize)
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": vertex count must be between 0 and 32");
  if (m < 0) throw std::runtime_error("line " + std::to_string(lineno) + ": negative edge count");
  WeightedDigraph d;
  d.n = static_cast<int>(n);
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(ls))
      throw std::runtime_error("graph: expected " + std::to_string(m) + " edges, got " +
                               std::to_string(i));
    long long tail, head, weight;
    if (!(ls >> tail >> head >> weight) || (ls >> extra))
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'tail head weight'");
    if (tail < 0 || tail >= n || head < 0 || head >= n)
      throw std::runtime_error("line " + std::to_string(lineno) + ": edge endpoint out of range");
    if (weight < 0)
      throw std::runtime_error("line " + std::to_string(lineno) + ": negative edge weight");
    d.edges.push_back(Edge{static_cast<int>(tail), static_cast<int>(head),
                           static_cast<int>(weight)});
  }
  if (next_content_line(ls))
    throw std::runtime_error("line " + std::to_string(lineno) + ": trailing content after edges");
  return d;
}

inline void write_digraph(std::ostream& out, const WeightedDigraph& d) {
  out << d.n << ' ' << d.edges.size() << '\n';
  for (const Edge& e : d.edges) out << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
}

}  // namespace itx
