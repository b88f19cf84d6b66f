#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace thhku {

// A nonzero symbol u^j v0^h σuμ_N of THH_*(ku).
struct BlockNode {
  long long N = 0;
  int h = 0;
  int j = 0;
  int degree = 0;  // 2N + 2 + 2j
  bool from_l = false;  // in the image of THH_*(ℓ): drawn ∘, else •
  bool named = false;   // base-row generator, j = h = 0

  std::string name() const;
  std::string tikz_id() const;  // u{j}p{h}m{N}
  auto key() const { return std::tuple(N, h, j); }
};

enum class EdgeKind { U, P };

struct BlockEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::U;
  bool bent = false;  // a p-edge to a different μ-index
  bool sum = false;   // one of two or more targets of p·(source)
};

struct TorsionBlock {
  long p = 3;
  int n = 1;
  int k = 1;   // copy: leftmost class σuμ_{kp^n}
  int lo = 0;  // degree window [lo, hi]
  int hi = 0;
  std::vector<BlockNode> nodes;  // sorted by (N, h, j)
  std::vector<BlockEdge> edges;  // per source node: u-edge first, then p-edges

  int index_of(long long N, int h, int j) const;
};

// Copy k of T_n: degrees [2kp^n + 2, 2(k+1)p^n + 1]; copy 1 is T_n itself.
// Throws std::invalid_argument outside p odd prime, n >= 1, 1 <= k <= p - 1,
// or when the window passes degree 20000.
TorsionBlock torsion_block(long p, int n, int k = 1);

struct PeriodicityReport {
  long p = 3;
  int n = 1;
  // Per copy k = 2..p-1: whether N -> N - (k-1)p^n carries it onto copy 1.
  std::vector<std::pair<int, bool>> copies;

  bool passed() const;
};

PeriodicityReport periodicity(long p, int n);

// Nodes and edges equal after relabelling b's μ-indices by -shift.
bool isomorphic_blocks(const TorsionBlock& a, const TorsionBlock& b, long long shift);

}  // namespace thhku
