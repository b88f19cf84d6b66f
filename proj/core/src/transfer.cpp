#include "thhku/transfer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace thhku {

std::string to_string(TransferTheorem t) {
  switch (t) {
    case TransferTheorem::Short: return "short";
    case TransferTheorem::Long: return "long";
    case TransferTheorem::Back: return "back";
    case TransferTheorem::NullA: return "null_a";
    case TransferTheorem::NullB: return "null_b";
  }
  return "?";
}

std::optional<TransferTheorem> parse_transfer_theorem(std::string_view name) {
  for (TransferTheorem t : all_transfer_theorems())
    if (to_string(t) == name) return t;
  return std::nullopt;
}

const std::vector<TransferTheorem>& all_transfer_theorems() {
  static const std::vector<TransferTheorem> all = {TransferTheorem::Short, TransferTheorem::Long,
                                                   TransferTheorem::Back, TransferTheorem::NullA,
                                                   TransferTheorem::NullB};
  return all;
}

int TransferReport::failures() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(), [](const auto& i) { return !i.passed; }));
}

const TransferInstance* TransferReport::first_failure() const {
  for (const auto& i : instances)
    if (!i.passed) return &i;
  return nullptr;
}

namespace {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Vec minus(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec plus(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec embed(const Vec& small, const std::vector<int>& idx, int ambient) {
  Vec v(ambient);
  for (size_t i = 0; i < idx.size(); ++i) v[idx[i]] = small[i];
  return v;
}

Vec restrict_to(const Vec& v, const std::vector<int>& idx) {
  Vec out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(v[i]);
  return out;
}

// Matrix sending chains of `from` to chains of `to` by matching cell ids;
// cells absent from `to` are sent to zero.
LocalMatrix transport(const FilteredComplex& from, const FilteredComplex& to, int degree) {
  LocalMatrix M(to.rank(degree), from.rank(degree), from.ring());
  const auto& src = from.cells(degree);
  const auto& dst = to.cells(degree);
  for (size_t j = 0; j < src.size(); ++j)
    for (size_t i = 0; i < dst.size(); ++i)
      if (src[j].id == dst[i].id) M.set(static_cast<int>(i), static_cast<int>(j), 1);
  return M;
}

Lattice coordinates_at_least(const FilteredComplex& fc, int degree, int n) {
  std::vector<Vec> gens;
  for (int i : fc.at_least(degree, n)) {
    Vec v(fc.rank(degree));
    v[i] = 1;
    gens.push_back(v);
  }
  return Lattice::span(gens, fc.rank(degree), fc.ring());
}

// d(F_s ∩ C_{degree+1}) inside C_degree.
Lattice boundaries_from(const FilteredComplex& fc, int degree, int s) {
  if (degree + 1 > fc.deg_max() || fc.rank(degree + 1) == 0) return Lattice(fc.rank(degree), fc.ring());
  return coordinates_at_least(fc, degree + 1, s).image(fc.boundary(degree + 1));
}

Vec random_combination(std::mt19937_64& rng, const Lattice& L) {
  Vec v(L.ambient());
  for (int j = 0; j < L.rank(); ++j) {
    long c = std::uniform_int_distribution<long>(-2, 2)(rng);
    if (c == 0) continue;
    for (int i = 0; i < L.ambient(); ++i) v[i] += Scalar(c) * L.basis().at(i, j);
  }
  return v;
}

std::vector<Vec> candidate_coordinates(int size) {
  std::vector<Vec> out;
  for (int i = 0; i < size; ++i) {
    Vec v(size);
    v[i] = 1;
    out.push_back(v);
  }
  if (size >= 2) out.push_back(Vec(size, Scalar(1)));
  return out;
}

std::vector<Vec> lattice_candidates(const Lattice& L) {
  std::vector<Vec> out;
  for (int j = 0; j < L.rank(); ++j) out.push_back(L.basis().column(j));
  if (L.rank() >= 2) {
    Vec s(L.ambient());
    for (const auto& v : out) s = plus(s, v);
    out.push_back(s);
  }
  return out;
}

std::string vec_str(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ")";
  return out.str();
}

struct Context {
  FilteredComplex B;
  GatherMap phi;
  SpectralSequence ssB, ssG;
  int lo = 0, hi = 0;
  std::map<int, SpectralSequence> ssT;

  Context(const FilteredComplex& fc, const GatherMap& g) : B(fc.limit_quotient()), phi(g) {
    B.validate();
    for (int n = B.n_min(); n + 1 < B.n_max(); ++n)
      if (phi(n + 1) <= phi(n)) throw std::invalid_argument("transfer_check: phi is not strictly increasing");
    ssB = SpectralSequence(B, std::max(1, B.n_max() - B.n_min()));
    FilteredComplex G = gather(B, phi);
    ssG = SpectralSequence(G, std::max(1, G.n_max() - G.n_min()));
    lo = G.n_min();
    hi = G.n_max();
    for (int N = lo; N < hi; ++N) {
      FilteredComplex T = truncate(B, start(N), end(N));
      ssT.emplace(N, SpectralSequence(T, std::max(1, end(N) - start(N))));
    }
  }

  int start(int N) const { return std::max(phi(N), B.n_min()); }
  int end(int N) const { return std::min(phi(N + 1), B.n_max()); }
  int block(int level) const { return phi.floor_inverse(level); }

  Vec to_G(int d, const Vec& c) const { return transport(B, ssG.complex(), d).apply(c); }
  Vec to_T(int N, int d, const Vec& c) const { return transport(B, ssT.at(N).complex(), d).apply(c); }
  Vec from_G(int d, const Vec& c) const { return transport(ssG.complex(), B, d).apply(c); }

  // Class of a B-chain in E^infinity of the N-th truncation; nullopt when not a cycle there.
  std::optional<Vec> truncated_class(int N, int d, int level, const Vec& c) const {
    const SpectralSequence& T = ssT.at(N);
    return T.class_of(d, level, T.stabilization(), to_T(N, d, c));
  }
};

// Both sides of the equivalence for one pair (x, y) of r-cycles of the total complex.
struct ShortPair {
  bool total = false;
  bool truncated = false;
};

std::optional<ShortPair> differential_hits(const Context& ctx, const SpectralSequence& T, int N, int r, int d, int n,
                                           const Vec& c, const Vec& y) {
  const Vec bc = ctx.B.boundary(d).apply(c);
  auto lb = ctx.ssB.class_of(d - 1, n + r, r, bc);
  auto rb = ctx.ssB.class_of(d - 1, n + r, r, y);
  auto lt = T.class_of(d - 1, n + r, r, ctx.to_T(N, d - 1, bc));
  auto rt = T.class_of(d - 1, n + r, r, ctx.to_T(N, d - 1, y));
  if (!lb || !rb || !lt || !rt) return std::nullopt;
  return ShortPair{*lb == *rb, *lt == *rt};
}

void check_short(const Context& ctx, TransferReport& rep) {
  for (int N = ctx.lo; N < ctx.hi; ++N) {
    const int a = ctx.start(N), b = ctx.end(N);
    const SpectralSequence& T = ctx.ssT.at(N);
    for (int r = 1; r < b - a; ++r)
      for (int n = a; n + r < b; ++n)
        for (int d = ctx.B.deg_min() + 1; d <= ctx.B.deg_max(); ++d) {
          const Lattice Zx = ctx.ssB.cycles(d, n, r);
          const Lattice Zy = ctx.ssB.cycles(d - 1, n + r, r);
          if (Zx.rank() == 0) continue;
          TransferInstance inst;
          std::ostringstream desc;
          desc << "N=" << N << " r=" << r << " n=" << n << " degree=" << d;
          inst.description = desc.str();
          // The r-cycles agree: transport identifies Z^r_n of both complexes.
          const LocalMatrix pi = transport(ctx.B, T.complex(), d);
          if (!(Zx.image(pi) == T.cycles(d, n, r))) {
            inst.passed = false;
            inst.witness = "transported r-cycles differ from the truncated r-cycles";
          }
          std::vector<Vec> ys = lattice_candidates(Zy);
          ys.push_back(Vec(ctx.B.rank(d - 1)));
          for (const Vec& c : lattice_candidates(Zx)) {
            if (!inst.passed) break;
            std::vector<Vec> targets = ys;
            const Vec bc = ctx.B.boundary(d).apply(c);
            targets.push_back(bc);
            for (const Vec& y : ys) targets.push_back(plus(bc, y));
            for (const Vec& y : targets) {
              auto hit = differential_hits(ctx, T, N, r, d, n, c, y);
              if (!hit) {
                inst.passed = false;
                inst.witness = "an r-cycle of the total complex is not an r-cycle after truncation";
              } else if (hit->total != hit->truncated) {
                inst.passed = false;
                inst.witness = "d^r(" + vec_str(c) + ") = " + vec_str(y) + " holds in exactly one of the two sequences";
              }
              if (!inst.passed) break;
            }
          }
          rep.instances.push_back(std::move(inst));
        }
  }
}

void check_long(const Context& ctx, TransferReport& rep) {
  for (int r = 1; r < ctx.ssB.r_max(); ++r)
    for (const auto& [key, e] : ctx.ssB.page(r).entries) {
      if (e.target_size == 0) continue;
      const int d = e.degree, n = e.level, m = n + r;
      const int N = ctx.block(n), M = ctx.block(m);
      if (N == M) continue;
      const PageEntry* tgt = ctx.ssB.page(r).find(d - 1, m);
      for (const Vec& x : candidate_coordinates(e.group.size())) {
        Vec y = tgt->group.reduce(e.differential.apply(x));
        if (is_zero(y)) continue;
        TransferInstance inst;
        std::ostringstream desc;
        desc << "d^" << r << " from (" << d << "," << n << ") to level " << m << " N=" << N << " M=" << M << " x="
             << vec_str(x);
        inst.description = desc.str();
        const Vec c = e.group.lift(x);
        const Vec z = ctx.B.boundary(d).apply(c);
        auto xt = ctx.truncated_class(N, d, n, c);
        auto yt = ctx.truncated_class(M, d - 1, m, z);
        auto fail = [&](const std::string& w) {
          inst.passed = false;
          inst.witness = w;
        };
        if (!xt || is_zero(*xt)) {
          fail("x is not a nonzero infinite cycle of the source truncation");
        } else if (!yt || is_zero(*yt)) {
          fail("y is not a nonzero infinite cycle of the target truncation");
        } else {
          const int rg = M - N;
          auto xg = ctx.ssG.class_of(d, N, rg, ctx.to_G(d, c));
          auto yg = ctx.ssG.class_of(d - 1, M, rg, ctx.to_G(d - 1, z));
          if (!xg || !yg) {
            fail("representatives are not gathered (M-N)-cycles");
          } else {
            Vec dx = ctx.ssG.apply_differential(d, N, rg, *xg);
            if (dx.empty()) dx = Vec(yg->size());
            if (dx != *yg) fail("gathered differential " + vec_str(dx) + " differs from " + vec_str(*yg));
          }
        }
        rep.instances.push_back(std::move(inst));
      }
    }
}

struct BackTrace {
  int m = 0;
  int n_prime = 0;
  Vec z, c_prime;
  bool ok = false;
};

BackTrace trace_back(const Context& ctx, int d, int N, const Vec& c) {
  BackTrace t;
  BoundaryLift lift = maximize_boundary_level(ctx.B, d, c, ctx.end(N));
  t.m = lift.level;
  t.z = lift.boundary;
  auto pre = deepest_preimage(ctx.B, d, t.z);
  if (!pre) return t;
  t.n_prime = pre->first;
  t.c_prime = pre->second;
  t.ok = true;
  return t;
}

void check_back(const Context& ctx, TransferReport& rep) {
  for (int rg = 1; rg < ctx.ssG.r_max(); ++rg)
    for (const auto& [key, e] : ctx.ssG.page(rg).entries) {
      if (e.target_size == 0) continue;
      const int d = e.degree, N = e.level, M = N + rg;
      const PageEntry* tgt = ctx.ssG.page(rg).find(d - 1, M);
      for (const Vec& x : candidate_coordinates(e.group.size())) {
        Vec y = tgt->group.reduce(e.differential.apply(x));
        if (is_zero(y)) continue;
        TransferInstance inst;
        std::ostringstream desc;
        desc << "gathered d^" << rg << " from (" << d << "," << N << ") x=" << vec_str(x);
        inst.description = desc.str();
        auto fail = [&](const std::string& w) {
          if (inst.passed) inst.witness = w;
          inst.passed = false;
        };
        const Vec c = ctx.from_G(d, e.group.lift(x));
        auto [n, c_rep] = representing_level(ctx.B, d, c, ctx.start(N), ctx.end(N));
        BackTrace t = trace_back(ctx, d, N, c);
        if (n >= ctx.end(N)) fail("x vanishes in its truncation");
        if (!t.ok) fail("d(c - w) is not a boundary");
        if (inst.passed && (t.m < ctx.phi(M) || t.m >= ctx.phi(M + 1)))
          fail("maximal lift level " + std::to_string(t.m) + " outside the target block");
        if (inst.passed) {
          auto yz = ctx.ssG.class_of(d - 1, M, rg, ctx.to_G(d - 1, t.z));
          if (!yz || *yz != y) fail("lifted boundary does not represent y");
        }
        if (inst.passed && (t.n_prime < n || t.n_prime >= ctx.end(N)))
          fail("n' = " + std::to_string(t.n_prime) + " outside [" + std::to_string(n) + ", " +
               std::to_string(ctx.end(N)) + ")");
        if (inst.passed) {
          const int rb = t.m - t.n_prime;
          auto xb = ctx.ssB.class_of(d, t.n_prime, rb, t.c_prime);
          auto yb = ctx.ssB.class_of(d - 1, t.m, rb, t.z);
          if (!xb || !yb) {
            fail("x' or y is not a cycle of the expected length in the total sequence");
          } else {
            Vec dxb = ctx.ssB.apply_differential(d, t.n_prime, rb, *xb);
            if (dxb.empty()) dxb = Vec(yb->size());
            if (dxb != *yb) fail("total differential of x' differs from y");
            // y-check is nonzero as a layer class; it may still die on page m - n'.
            auto y1 = ctx.ssB.class_of(d - 1, t.m, 1, t.z);
            if (!y1 || is_zero(*y1)) fail("y-check vanishes in its layer");
          }
        }
        if (inst.passed) {
          auto xt = ctx.truncated_class(N, d, t.n_prime, t.c_prime);
          if (!xt || is_zero(*xt)) fail("x' is not represented at level n' in its truncation");
          auto xg = ctx.ssG.class_of(d, N, rg, ctx.to_G(d, t.c_prime));
          if (!xg) {
            fail("x' is not a gathered (M-N)-cycle");
          } else {
            Vec dxg = ctx.ssG.apply_differential(d, N, rg, *xg);
            if (dxg != y) fail("gathered differential of x' differs from y");
          }
        }
        // n' must not depend on the chosen representative of x.
        if (inst.passed) {
          std::mt19937_64 rng(static_cast<std::uint64_t>(1000003 * d + 101 * N + rg));
          Lattice bd = boundaries_from(ctx.B, d, ctx.start(N));
          Lattice tail = coordinates_at_least(ctx.B, d, ctx.end(N));
          for (int trial = 0; trial < 2 && inst.passed; ++trial) {
            Vec c2 = plus(plus(c, random_combination(rng, bd)), random_combination(rng, tail));
            BackTrace t2 = trace_back(ctx, d, N, c2);
            if (!t2.ok || t2.m != t.m || t2.n_prime != t.n_prime)
              fail("n' depends on the representative: " + std::to_string(t.n_prime) + " vs " +
                   std::to_string(t2.n_prime));
          }
        }
        rep.instances.push_back(std::move(inst));
      }
    }
}

// c in Z^r_n(B) modulo F_{n+1} and boundaries, i.e. its E^1 class survives to E^r.
bool class_in_cycles(const Context& ctx, int d, int n, int r, const Vec& c) {
  Lattice L = ctx.ssB.cycles(d, n, r) + coordinates_at_least(ctx.B, d, n + 1) + boundaries_from(ctx.B, d, n);
  return L.contains(c);
}

void check_null_a(const Context& ctx, TransferReport& rep) {
  for (int N = ctx.lo; N < ctx.hi; ++N)
    for (int M = N; M < ctx.hi; ++M)
      for (int d = ctx.B.deg_min(); d <= ctx.B.deg_max(); ++d) {
        const Lattice Zg = ctx.ssG.cycles(d, N, M - N + 1);
        for (const Vec& cg : lattice_candidates(Zg)) {
          const Vec c = ctx.from_G(d, cg);
          auto [n, c2] = representing_level(ctx.B, d, c, ctx.start(N), ctx.end(N));
          if (n >= ctx.end(N)) continue;
          TransferInstance inst;
          std::ostringstream desc;
          desc << "N=" << N << " M=" << M << " degree=" << d << " level=" << n;
          inst.description = desc.str();
          const int t = ctx.phi(M + 1);
          if (!class_in_cycles(ctx, d, n, t - n, c2)) {
            inst.passed = false;
            inst.witness = "representative supports a differential shorter than phi(M+1) - n";
          }
          std::mt19937_64 rng(static_cast<std::uint64_t>(7919 * N + 31 * M + d));
          Lattice moves = ctx.ssB.cycles(d + 1, ctx.start(N), n - ctx.start(N));
          if (d + 1 <= ctx.B.deg_max() && ctx.B.rank(d + 1) > 0) {
            for (int trial = 0; trial < 2 && inst.passed; ++trial) {
              Vec c3 = plus(c2, ctx.B.boundary(d + 1).apply(random_combination(rng, moves)));
              if (!class_in_cycles(ctx, d, n, t - n, c3)) {
                inst.passed = false;
                inst.witness = "another representative supports a short differential";
              }
            }
          }
          rep.instances.push_back(std::move(inst));
        }
      }
}

void check_null_b(const Context& ctx, TransferReport& rep) {
  for (int n = ctx.B.n_min(); n < ctx.B.n_max(); ++n) {
    const int N = ctx.block(n);
    for (int m = n + 1; m <= ctx.B.n_max(); ++m) {
      std::vector<int> Ms;
      for (int M = N + 1; ctx.phi(M + 1) <= m; ++M) Ms.push_back(M);
      if (Ms.empty()) continue;
      for (int d = ctx.B.deg_min(); d <= ctx.B.deg_max(); ++d) {
        const Lattice Z = ctx.ssB.cycles(d, n, m - n + 1);
        for (const Vec& c : lattice_candidates(Z)) {
          auto xt = ctx.truncated_class(N, d, n, c);
          if (!xt || is_zero(*xt)) continue;  // does not represent a class
          TransferInstance inst;
          std::ostringstream desc;
          desc << "level=" << n << " m=" << m << " degree=" << d;
          inst.description = desc.str();
          const Vec cg = ctx.to_G(d, c);
          for (int M : Ms) {
            // The class of c in E^1_N of the gathered sequence must survive to page M - N + 1.
            const FilteredComplex& G = ctx.ssG.complex();
            Lattice L = ctx.ssG.cycles(d, N, M - N + 1) + coordinates_at_least(G, d, N + 1) + boundaries_from(G, d, N);
            if (!L.contains(cg)) {
              inst.passed = false;
              inst.witness = "gathered class is not an (M-N)-cycle for M=" + std::to_string(M);
              break;
            }
          }
          rep.instances.push_back(std::move(inst));
        }
      }
    }
  }
}

}  // namespace

BoundaryLift maximize_boundary_level(const FilteredComplex& fc, int degree, const Vec& c, int s) {
  const Vec bc = fc.boundary(degree).apply(c);
  const std::vector<int> cols = fc.at_least(degree, s);
  for (int m = fc.n_max(); m >= fc.n_min(); --m) {
    const std::vector<int> rows = fc.below(degree - 1, m);
    Vec w(fc.rank(degree));
    if (!rows.empty() && !cols.empty()) {
      LocalMatrix A = fc.boundary(degree).select_rows(rows).select_columns(cols);
      auto sol = solve(A, restrict_to(bc, rows));
      if (!sol) continue;
      w = embed(*sol, cols, fc.rank(degree));
    } else if (!rows.empty() && !is_zero(restrict_to(bc, rows))) {
      continue;
    }
    return {m, w, minus(bc, fc.boundary(degree).apply(w))};
  }
  throw std::logic_error("maximize_boundary_level: no level found");
}

std::optional<std::pair<int, Vec>> deepest_preimage(const FilteredComplex& fc, int degree, const Vec& z) {
  if (is_zero(z)) return std::make_pair(fc.n_max(), Vec(fc.rank(degree)));
  for (int n = fc.n_max() - 1; n >= fc.n_min(); --n) {
    const std::vector<int> cols = fc.at_least(degree, n);
    if (cols.empty()) continue;
    auto sol = solve(fc.boundary(degree).select_columns(cols), z);
    if (sol) return std::make_pair(n, embed(*sol, cols, fc.rank(degree)));
  }
  return std::nullopt;
}

std::pair<int, Vec> representing_level(const FilteredComplex& fc, int degree, const Vec& c, int s, int cap) {
  const bool has_up = degree + 1 <= fc.deg_max() && fc.rank(degree + 1) > 0;
  const std::vector<int> up = has_up ? fc.at_least(degree + 1, s) : std::vector<int>{};
  const LocalMatrix bd = has_up ? fc.boundary(degree + 1).select_columns(up) : LocalMatrix(fc.rank(degree), 0, fc.ring());
  for (int k = cap; k >= s; --k) {
    const std::vector<int> keep = fc.at_least(degree, k);
    LocalMatrix I(fc.rank(degree), static_cast<int>(keep.size()), fc.ring());
    for (size_t j = 0; j < keep.size(); ++j) I.set(keep[j], static_cast<int>(j), 1);
    LocalMatrix A = hconcat(I, bd);
    auto sol = solve(A, c);
    if (!sol) continue;
    Vec e(sol->begin() + static_cast<long>(keep.size()), sol->end());
    Vec chain = has_up ? minus(c, bd.apply(e)) : c;
    return {k, chain};
  }
  return {s, c};
}

TransferReport transfer_check(const FilteredComplex& fc, const GatherMap& phi, TransferTheorem theorem) {
  Context ctx(fc, phi);
  TransferReport rep;
  rep.theorem = theorem;
  switch (theorem) {
    case TransferTheorem::Short: check_short(ctx, rep); break;
    case TransferTheorem::Long: check_long(ctx, rep); break;
    case TransferTheorem::Back: check_back(ctx, rep); break;
    case TransferTheorem::NullA: check_null_a(ctx, rep); break;
    case TransferTheorem::NullB: check_null_b(ctx, rep); break;
  }
  return rep;
}

FixtureReport verify_counterexample_fixture() {
  FixtureReport rep;
  CounterexampleFixture f = counterexample_fixture();
  const FilteredComplex& fc = f.complex;
  const Vec a{1, 0}, b{0, 1}, y{1};

  SpectralSequence B(fc, 3);
  auto xa = B.class_of(1, 1, 1, a);
  auto ya = B.class_of(0, 2, 1, y);
  bool d_a = xa && ya && B.apply_differential(1, 1, 1, *xa) == *ya && !is_zero(*ya);
  bool b_survives = true;
  for (int r = 1; r <= B.stabilization(); ++r) {
    auto xb = B.class_of(1, 0, r, b);
    if (!xb || is_zero(*xb)) b_survives = false;
  }
  rep.total_pattern = d_a && b_survives;
  rep.lines.push_back(std::string("(B): d(") + f.names.at("a") + ") = " + f.names.at("y") + (d_a ? " holds" : " FAILS") +
                      "; " + f.names.at("b") + (b_survives ? " survives" : " does not survive"));

  SpectralSequence T(truncate(fc, 0, 2), 2);
  bool none = true;
  for (const auto& p : T.pages()) none = none && !p.has_nonzero_differential();
  rep.truncated_pattern = none;
  rep.lines.push_back(std::string("(T_0^2): ") + (none ? "no nonzero differential" : "unexpected differential"));

  SpectralSequence G(gather(fc, f.phi), 2);
  auto ga = G.class_of(1, 0, 1, a);
  auto gb = G.class_of(1, 0, 1, b);
  auto gab = G.class_of(1, 0, 1, Vec{1, 1});
  auto gy = G.class_of(0, 1, 1, y);
  bool ok = ga && gb && gab && gy && !is_zero(*gy);
  if (ok) {
    ok = G.apply_differential(1, 0, 1, *ga) == *gy && is_zero(G.apply_differential(1, 0, 1, *gb)) &&
         G.apply_differential(1, 0, 1, *gab) == *gy;
  }
  rep.gathered_pattern = ok;
  rep.lines.push_back(std::string("(phi B): d(x̄′) = ȳ, d(x̄−x̄′) = 0, d(x̄) = ȳ") + (ok ? " hold" : " FAIL"));
  return rep;
}

}  // namespace thhku
