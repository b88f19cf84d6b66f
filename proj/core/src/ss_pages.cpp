#include "thhku/ss_pages.hpp"

#include <algorithm>

namespace thhku {

const PageEntry* Page::find(int degree, int level) const {
  auto it = entries.find({degree, level});
  return it == entries.end() ? nullptr : &it->second;
}

BigradedGroup Page::groups(long p) const {
  BigradedGroup out(p);
  for (const auto& [key, e] : entries) out.add(e.x(), e.y(), e.group.value());
  return out;
}

bool Page::has_nonzero_differential() const {
  for (const auto& [key, e] : entries)
    if (!e.differential.is_zero()) return true;
  return false;
}

namespace {

Lattice coordinate_lattice(int ambient, const std::vector<int>& idx, Ring ring) {
  std::vector<Vec> gens;
  for (int i : idx) {
    Vec v(ambient);
    v[i] = 1;
    gens.push_back(v);
  }
  return Lattice::span(gens, ambient, ring);
}

Lattice embed_columns(const LocalMatrix& K, const std::vector<int>& rows, int ambient, Ring ring) {
  std::vector<Vec> gens;
  for (int j = 0; j < K.cols(); ++j) {
    Vec v(ambient);
    for (size_t i = 0; i < rows.size(); ++i) v[rows[i]] = K.at(static_cast<int>(i), j);
    gens.push_back(v);
  }
  return Lattice::span(gens, ambient, ring);
}

// Lattice spanned by p^e e_i for the torsion generators of q (free ones add nothing).
Lattice relation_lattice(const Quotient& q, Ring ring) {
  std::vector<Vec> gens;
  for (int i = 0; i < q.size(); ++i) {
    if (q.is_free(i)) continue;
    Vec v(q.size());
    v[i] = Scalar(ipow(ring.p, q.exponent(i)));
    gens.push_back(v);
  }
  return Lattice::span(gens, q.size(), ring);
}

}  // namespace

SpectralSequence::SpectralSequence(const FilteredComplex& fc, int r_max) : fc_(fc.limit_quotient()) {
  if (r_max < 1) throw std::invalid_argument("ss_pages: r_max must be at least 1");
  fc_.validate();
  for (int r = 1; r <= r_max; ++r) {
    Page page;
    page.r = r;
    for (int d = fc_.deg_min(); d <= fc_.deg_max(); ++d)
      for (int n = fc_.n_min(); n < fc_.n_max(); ++n) {
        Quotient q = page_group(d, n, r);
        if (q.size() == 0) continue;
        PageEntry e;
        e.degree = d;
        e.level = n;
        for (int i = 0; i < q.size(); ++i) e.names.push_back(fc_.describe_chain(d, q.representative(i)));
        const bool has_target = n + r < fc_.n_max() && d - 1 >= fc_.deg_min() && fc_.rank(d - 1) > 0;
        Quotient target = has_target ? page_group(d - 1, n + r, r) : Quotient();
        e.target_size = has_target ? target.size() : 0;
        e.differential = LocalMatrix(e.target_size, q.size(), fc_.ring());
        if (e.target_size > 0) {
          LocalMatrix bd = fc_.boundary(d);
          for (int i = 0; i < q.size(); ++i) {
            Vec img = target.classify(bd.apply(q.representative(i)));
            for (int t = 0; t < e.target_size; ++t) e.differential.set(t, i, img[t]);
          }
        }
        e.group = std::move(q);
        page.entries.emplace(std::make_pair(d, n), std::move(e));
      }
    pages_.push_back(std::move(page));
  }
}

const Page& SpectralSequence::page(int r) const {
  if (r < 1 || r > r_max()) throw std::out_of_range("page index outside the computed range");
  return pages_[r - 1];
}

int SpectralSequence::last_nonzero_differential() const {
  int last = 0;
  for (const auto& p : pages_)
    if (p.has_nonzero_differential()) last = p.r;
  return last;
}

const Page& SpectralSequence::einfty() const {
  if (!stabilized())
    throw std::runtime_error("spectral sequence not computed up to its stabilization page " +
                             std::to_string(stabilization()));
  return pages_[stabilization() - 1];
}

BigradedGroup SpectralSequence::einfty_groups() const { return einfty().groups(ring().p); }

Lattice SpectralSequence::filtration(int degree, int n) const {
  const int m = fc_.rank(degree);
  if (n >= fc_.n_max()) return Lattice(m, ring());
  return coordinate_lattice(m, fc_.at_least(degree, std::max(n, fc_.n_min())), ring());
}

Lattice SpectralSequence::cycles(int degree, int n, int r) const {
  // F_n = F_{n_min} below the window, but the boundary condition keeps n + r.
  const int target = n + r;
  n = std::max(n, fc_.n_min());
  r = target - n;
  auto key = std::make_tuple(degree, n, r);
  if (auto it = cycle_cache_.find(key); it != cycle_cache_.end()) return it->second;
  const int m = fc_.rank(degree);
  Lattice out;
  if (n >= fc_.n_max() || m == 0) {
    out = Lattice(m, ring());
  } else {
    std::vector<int> cols = fc_.at_least(degree, n);
    std::vector<int> rows = degree - 1 >= fc_.deg_min() ? fc_.below(degree - 1, n + r) : std::vector<int>{};
    if (rows.empty()) {
      out = coordinate_lattice(m, cols, ring());
    } else {
      LocalMatrix sub = fc_.boundary(degree).select_rows(rows).select_columns(cols);
      out = embed_columns(kernel_basis(sub), cols, m, ring());
    }
  }
  cycle_cache_.emplace(key, out);
  return out;
}

Lattice SpectralSequence::boundaries(int degree, int n, int r) const {
  Lattice out = cycles(degree, n + 1, r - 1);
  if (degree + 1 <= fc_.deg_max() && fc_.rank(degree + 1) > 0 && fc_.rank(degree) > 0) {
    Lattice src = cycles(degree + 1, n - r + 1, r - 1);
    out = out + src.image(fc_.boundary(degree + 1));
  }
  return out;
}

Quotient SpectralSequence::page_group(int degree, int n, int r) const {
  return Quotient(cycles(degree, n, r), boundaries(degree, n, r));
}

std::optional<Vec> SpectralSequence::class_of(int degree, int n, int r, const Vec& chain) const {
  if (!cycles(degree, n, r).contains(chain)) return std::nullopt;
  if (r <= r_max()) {
    if (const PageEntry* e = page(r).find(degree, n)) return e->group.classify(chain);
    return Vec{};
  }
  return page_group(degree, n, r).classify(chain);
}

Vec SpectralSequence::apply_differential(int degree, int n, int r, const Vec& coords) const {
  const PageEntry* e = page(r).find(degree, n);
  if (!e) return {};
  Vec out = e->differential.apply(coords);
  if (const PageEntry* t = page(r).find(degree - 1, n + r)) return t->group.reduce(out);
  return out;
}

SpectralSequence ss_pages(const FilteredComplex& fc, int r_max) { return SpectralSequence(fc, r_max); }

BigradedGroup einfty_oracle(const FilteredComplex& input) {
  const FilteredComplex fc = input.limit_quotient();
  const Ring ring = fc.ring();
  BigradedGroup out(ring.p);
  for (int d = fc.deg_min(); d <= fc.deg_max(); ++d) {
    const int m = fc.rank(d);
    if (m == 0) continue;
    Lattice boundaries(m, ring);
    if (d + 1 <= fc.deg_max() && fc.rank(d + 1) > 0) boundaries = Lattice::span(fc.boundary(d + 1));
    const bool has_out = d - 1 >= fc.deg_min() && fc.rank(d - 1) > 0;
    auto cycles_in = [&](int n) {
      std::vector<int> cols = fc.at_least(d, n);
      std::vector<Vec> gens;
      if (!has_out) {
        for (int c : cols) {
          Vec v(m);
          v[c] = 1;
          gens.push_back(v);
        }
      } else {
        LocalMatrix K = kernel_basis(fc.boundary(d).select_columns(cols));
        for (int j = 0; j < K.cols(); ++j) {
          Vec v(m);
          for (size_t i = 0; i < cols.size(); ++i) v[cols[i]] = K.at(static_cast<int>(i), j);
          gens.push_back(v);
        }
      }
      return Lattice::span(gens, m, ring) + boundaries;
    };
    Lattice upper = cycles_in(fc.n_min());
    for (int n = fc.n_min(); n < fc.n_max(); ++n) {
      Lattice lower = n + 1 < fc.n_max() ? cycles_in(n + 1) : boundaries;
      out.add(d - n, n, Quotient(upper, lower).value());
      upper = lower;
    }
  }
  return out;
}

GroupValue page_homology(const SpectralSequence& ss, int r, int degree, int level) {
  const Ring ring = ss.ring();
  const Page& page = ss.page(r);
  const PageEntry* here = page.find(degree, level);
  if (!here) return {};
  const int k = here->group.size();
  Lattice kernel = Lattice::whole(k, ring);
  if (here->target_size > 0) {
    const PageEntry* tgt = page.find(degree - 1, level + r);
    Lattice rel = tgt ? relation_lattice(tgt->group, ring) : Lattice(here->target_size, ring);
    kernel = kernel.preimage(here->differential, rel);
  }
  Lattice image = relation_lattice(here->group, ring);
  if (const PageEntry* src = page.find(degree + 1, level - r); src && src->target_size > 0)
    image = image + Lattice::span(src->differential);
  return Quotient(kernel, image).value();
}

bool differential_squares_to_zero(const SpectralSequence& ss, int r) {
  const Ring ring = ss.ring();
  const Page& page = ss.page(r);
  for (const auto& [key, e] : page.entries) {
    if (e.target_size == 0) continue;
    const PageEntry* mid = page.find(e.degree - 1, e.level + r);
    if (!mid || mid->target_size == 0) continue;
    const PageEntry* last = page.find(e.degree - 2, e.level + 2 * r);
    if (!last) continue;
    LocalMatrix comp = mid->differential * e.differential;
    Lattice rel = relation_lattice(last->group, ring);
    for (int j = 0; j < comp.cols(); ++j)
      if (!rel.contains(comp.column(j))) return false;
  }
  return true;
}

}  // namespace thhku
