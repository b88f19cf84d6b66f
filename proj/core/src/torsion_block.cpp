#include "thhku/torsion_block.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "thhku/presentation.hpp"
#include "thhku/thh_presentations.hpp"

namespace thhku {

std::string BlockNode::name() const {
  std::string out;
  if (j == 1) out = "u";
  if (j > 1) out = "u^" + std::to_string(j);
  return out + mu_name(h, "σu", N);
}

std::string BlockNode::tikz_id() const {
  return "u" + std::to_string(j) + "p" + std::to_string(h) + "m" + std::to_string(N);
}

int TorsionBlock::index_of(long long N, int h, int j) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].N == N && nodes[i].h == h && nodes[i].j == j) return static_cast<int>(i);
  return -1;
}

namespace {

long long lpow(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Source symbols u^a g of ku_* ⊗ THH_*(ℓ) with (p-1) | a are the classes
// v1^{a/(p-1)} g of THH_*(ℓ) itself.
Lattice image_of_thh_l(const ModuleMap& f, const PresentedModule& src, const PresentedModule& tgt, int degree,
                       long p) {
  const LocalMatrix M = f.matrix(degree);
  const auto& basis = src.piece(degree).basis;
  std::vector<int> cols;
  for (size_t j = 0; j < basis.size(); ++j)
    if (basis[j].first % (p - 1) == 0) cols.push_back(static_cast<int>(j));
  const Lattice& rels = tgt.piece(degree).relations;
  if (cols.empty()) return rels;
  return Lattice::span(M.select_columns(cols)) + rels;
}

}  // namespace

TorsionBlock torsion_block(long p, int n, int k) {
  require_odd_prime(p);
  if (n < 1) throw std::invalid_argument("torsion block index n must be at least 1");
  if (k < 1 || k > p - 1) throw std::invalid_argument("copy index k must lie in [1, p-1]");
  const long long pn = lpow(p, n);
  TorsionBlock b;
  b.p = p;
  b.n = n;
  b.k = k;
  b.lo = static_cast<int>(2 * k * pn + 2);
  const long long hi = 2 * (k + 1) * pn + 1;
  if (hi > 20000) throw std::invalid_argument("torsion block window is too large");
  b.hi = static_cast<int>(hi);

  const PresentedModule ku(presentation_thh_ku(p, b.hi));
  const PresentedModule src(presentation_ku_tensor_thh_l(p, b.hi));
  const ModuleMap f(src, ku, extension_of_scalars_images(src.presentation(), ku.presentation()));
  const Presentation& P = ku.presentation();
  std::map<int, Lattice> image;  // by degree

  for (long long N = p; 2 * N + 2 <= b.hi; N += p) {
    if (2 * N + 2 < b.lo) continue;
    for (int h = 0;; ++h) {
      const int g = P.index_of(mu_name(h, "σu", N));
      if (g < 0) break;
      for (int j = 0; 2 * N + 2 + 2 * j <= b.hi; ++j) {
        const int d = static_cast<int>(2 * N + 2 + 2 * j);
        const Vec x = ku.basis_vector(d, j, g);
        if (ku.is_zero(d, x)) break;  // u-multiples of zero stay zero
        if (!image.count(d)) image.emplace(d, image_of_thh_l(f, src, ku, d, p));
        BlockNode node;
        node.N = N;
        node.h = h;
        node.j = j;
        node.degree = d;
        node.named = h == 0 && j == 0;
        node.from_l = image.at(d).contains(x);
        b.nodes.push_back(node);
      }
    }
  }
  std::sort(b.nodes.begin(), b.nodes.end(), [](const BlockNode& x, const BlockNode& y) { return x.key() < y.key(); });

  for (size_t i = 0; i < b.nodes.size(); ++i) {
    const BlockNode& x = b.nodes[i];
    const int up = b.index_of(x.N, x.h, x.j + 1);
    if (up >= 0) b.edges.push_back({static_cast<int>(i), up, EdgeKind::U, false, false});
    // p-edges come from the stored relation p·g = Σ u^a g', times u^j.
    const int g = P.index_of(mu_name(x.h, "σu", x.N));
    for (const Relation& rel : P.relations) {
      if (rel.lhs.size() != 1 || rel.lhs[0].generator != g || rel.lhs[0].power != 0 || rel.lhs[0].coeff != p ||
          rel.rhs.empty())
        continue;
      std::vector<int> targets;
      for (const PresTerm& t : rel.rhs) {
        const int d = P.term_degree(t) + 2 * x.j;
        if (d > b.hi || ku.is_zero(d, ku.basis_vector(d, t.power + x.j, t.generator))) continue;
        // Locate the node by name: the target symbol is u^{a+j} v0^{h'} σuμ_{N'}.
        for (size_t m = 0; m < b.nodes.size(); ++m) {
          const BlockNode& y = b.nodes[m];
          if (y.j == t.power + x.j && P.index_of(mu_name(y.h, "σu", y.N)) == t.generator)
            targets.push_back(static_cast<int>(m));
        }
      }
      for (int m : targets)
        b.edges.push_back({static_cast<int>(i), m, EdgeKind::P, b.nodes[m].N != x.N, targets.size() > 1});
    }
  }
  return b;
}

bool isomorphic_blocks(const TorsionBlock& a, const TorsionBlock& b, long long shift) {
  using Key = std::tuple<long long, int, int, bool, bool>;
  auto nodes = [](const TorsionBlock& t, long long s) {
    std::set<Key> out;
    for (const auto& x : t.nodes) out.insert({x.N - s, x.h, x.j, x.from_l, x.named});
    return out;
  };
  using EKey = std::tuple<std::tuple<long long, int, int>, std::tuple<long long, int, int>, EdgeKind, bool, bool>;
  auto edges = [](const TorsionBlock& t, long long s) {
    std::set<EKey> out;
    for (const auto& e : t.edges) {
      const auto& x = t.nodes[e.from];
      const auto& y = t.nodes[e.to];
      out.insert({{x.N - s, x.h, x.j}, {y.N - s, y.h, y.j}, e.kind, e.bent, e.sum});
    }
    return out;
  };
  return nodes(a, 0) == nodes(b, shift) && edges(a, 0) == edges(b, shift) && a.edges.size() == b.edges.size();
}

bool PeriodicityReport::passed() const {
  for (const auto& [k, ok] : copies)
    if (!ok) return false;
  return true;
}

PeriodicityReport periodicity(long p, int n) {
  PeriodicityReport r;
  r.p = p;
  r.n = n;
  const TorsionBlock base = torsion_block(p, n, 1);
  for (int k = 2; k <= p - 1; ++k) {
    const TorsionBlock copy = torsion_block(p, n, k);
    r.copies.emplace_back(k, isomorphic_blocks(base, copy, (k - 1) * lpow(p, n)));
  }
  return r;
}

}  // namespace thhku
