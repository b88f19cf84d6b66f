#pragma once

#include <string>
#include <vector>

namespace thhku {

// Vertices μ_N and σuμ_N for p | N <= N_max (N = 0 included); one edge
// μ_{(k+1)p^{n+1}} -- σuμ_{kp^{n+1}} for every k >= 0, n >= 0 in range.
struct GraphVertex {
  long long N = 0;
  bool mu = true;  // false for σuμ_N
  int valuation = 0;  // ν(N); kInfiniteValuation for N = 0

  std::string name() const;
};

struct GraphEdge {
  int mu_vertex = 0;
  int su_vertex = 0;
  int n = 0;
  long long k = 0;
};

struct GraphComponent {
  int root = 0;  // smallest vertex index
  int size = 0;
  int edges = 0;
};

struct GraphReport {
  long p = 3;
  long long N_max = 0;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<GraphComponent> components;

  bool bipartite = true;
  bool acyclic = true;
  std::string cycle_edge;  // first edge closing a cycle, if any
  // Vertices whose partner edge leaves the window: μ_0, σuμ_0, and σuμ_N with
  // N + p^{ν(N)} > N_max.
  std::vector<int> exempt;
  // Non-exempt vertices without exactly one non-decreasing-valuation edge.
  std::vector<std::string> uniqueness_violations;

  bool unique_edge_ok() const { return uniqueness_violations.empty(); }
  bool passed() const { return bipartite && acyclic && unique_edge_ok(); }
};

// Throws std::invalid_argument unless p is an odd prime and N_max >= p^2.
GraphReport differential_graph(long p, long long N_max);

}  // namespace thhku
