#include "thhku/differential_graph.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "thhku/plocal.hpp"
#include "thhku/thh_presentations.hpp"

namespace thhku {

std::string GraphVertex::name() const {
  if (N == 0) return mu ? "1" : "σu";
  return (mu ? "μ_" : "σuμ_") + std::to_string(N);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

long long power_of(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

GraphReport differential_graph(long p, long long N_max) {
  require_odd_prime(p);
  if (N_max < static_cast<long long>(p) * p) throw std::invalid_argument("N_max must be at least p^2");
  GraphReport g;
  g.p = p;
  g.N_max = N_max;
  std::map<std::pair<long long, bool>, int> index;
  for (long long N = 0; N <= N_max; N += p)
    for (bool mu : {true, false}) {
      index[{N, mu}] = static_cast<int>(g.vertices.size());
      g.vertices.push_back({N, mu, N == 0 ? kInfiniteValuation : nu(N, p)});
    }
  for (long long step = p, n = 0; step <= N_max; step *= p, ++n)
    for (long long k = 0; (k + 1) * step <= N_max; ++k)
      g.edges.push_back({index.at({(k + 1) * step, true}), index.at({k * step, false}), static_cast<int>(n), k});

  const int V = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(V);  // edge ids
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].mu_vertex].push_back(static_cast<int>(e));
    adj[g.edges[e].su_vertex].push_back(static_cast<int>(e));
  }
  auto other = [&](int e, int v) { return g.edges[e].mu_vertex == v ? g.edges[e].su_vertex : g.edges[e].mu_vertex; };

  // Two-colouring by BFS; the μ / σuμ split is not assumed.
  std::vector<int> colour(V, -1);
  for (int s = 0; s < V; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int e : adj[v]) {
        const int w = other(e, v);
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          g.bipartite = false;
        }
      }
    }
  }

  UnionFind uf(V);
  for (const auto& e : g.edges)
    if (!uf.unite(e.mu_vertex, e.su_vertex) && g.acyclic) {
      g.acyclic = false;
      g.cycle_edge = g.vertices[e.mu_vertex].name() + " -- " + g.vertices[e.su_vertex].name();
    }

  for (int v = 0; v < V; ++v) {
    const GraphVertex& x = g.vertices[v];
    const bool exempt = x.N == 0 || (!x.mu && x.N + power_of(p, x.valuation) > N_max);
    if (exempt) {
      g.exempt.push_back(v);
      continue;
    }
    int up = 0;
    for (int e : adj[v])
      if (g.vertices[other(e, v)].valuation >= x.valuation) ++up;
    if (up != 1) g.uniqueness_violations.push_back(x.name() + " has " + std::to_string(up));
  }

  std::map<int, GraphComponent> comps;
  for (int v = 0; v < V; ++v) {
    auto& c = comps[uf.find(v)];
    if (c.size == 0) c.root = v;
    ++c.size;
  }
  for (const auto& e : g.edges) ++comps[uf.find(e.mu_vertex)].edges;
  for (const auto& [r, c] : comps) g.components.push_back(c);
  return g;
}

}  // namespace thhku
