#include "thhku/lattice.hpp"

namespace thhku {

Lattice::Lattice(int ambient, Ring ring)
    : ambient_(ambient), ring_(ring), basis_(ambient, 0, ring), U_(LocalMatrix::identity(ambient, ring)) {}

Lattice Lattice::span(const LocalMatrix& generators) {
  Lattice L;
  L.ambient_ = generators.rows();
  L.ring_ = generators.ring();
  SmithForm snf = smith_normal_form(generators);
  L.basis_ = LocalMatrix(L.ambient_, snf.rank, L.ring_);
  for (int k = 0; k < snf.rank; ++k) {
    Scalar scale = L.ring_.field ? Scalar(1) : Scalar(ipow(L.ring_.p, snf.exponents[k]));
    for (int i = 0; i < L.ambient_; ++i) L.basis_.set(i, k, snf.U_inv.at(i, k) * scale);
  }
  L.U_ = std::move(snf.U);
  L.exponents_ = std::move(snf.exponents);
  return L;
}

Lattice Lattice::span(const std::vector<Vec>& generators, int ambient, Ring ring) {
  return span(LocalMatrix::from_columns(generators, ambient, ring));
}

Lattice Lattice::whole(int ambient, Ring ring) { return span(LocalMatrix::identity(ambient, ring)); }

std::optional<Vec> Lattice::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Lattice: vector size mismatch");
  Vec y = U_.apply(v);
  Vec c(rank());
  for (int k = 0; k < ambient_; ++k) {
    if (k < rank()) {
      if (ring_.field) {
        c[k] = y[k];
      } else {
        Scalar q = y[k] / Scalar(ipow(ring_.p, exponents_[k]));
        if (!is_p_local(q, ring_.p)) return std::nullopt;
        c[k] = q;
      }
    } else if (y[k] != 0) {
      return std::nullopt;
    }
  }
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  for (int j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Lattice sum: ambient mismatch");
  return span(hconcat(basis_, other.basis_));
}

Lattice Lattice::image(const LocalMatrix& f) const {
  if (f.cols() != ambient_) throw std::invalid_argument("Lattice image: shape mismatch");
  return span(f * basis_);
}

Lattice Lattice::preimage(const LocalMatrix& f, const Lattice& target) const {
  if (f.cols() != ambient_ || f.rows() != target.ambient_)
    throw std::invalid_argument("Lattice preimage: shape mismatch");
  LocalMatrix fb = f * basis_;
  LocalMatrix joint = hconcat(fb, target.basis_);
  LocalMatrix K = kernel_basis(joint);
  std::vector<int> top;
  for (int i = 0; i < rank(); ++i) top.push_back(i);
  return span(basis_ * K.select_rows(top));
}

LocalMatrix Lattice::coordinate_map() const {
  LocalMatrix C(rank(), ambient_, ring_);
  for (int k = 0; k < rank(); ++k) {
    Scalar scale = ring_.field ? Scalar(1) : Scalar(1) / Scalar(ipow(ring_.p, exponents_[k]));
    for (int j = 0; j < ambient_; ++j) C.set(k, j, U_.at(k, j) * scale);
  }
  return C;
}

Quotient::Quotient(const Lattice& big, const Lattice& small) : big_(big), small_(small) {
  const Ring ring = big.ring();
  const int k = big.rank();
  LocalMatrix S(k, small.rank(), ring);
  for (int j = 0; j < small.rank(); ++j) {
    auto c = big.coordinates(small.basis().column(j));
    if (!c) throw std::invalid_argument("Quotient: small lattice not contained in big lattice");
    for (int i = 0; i < k; ++i) S.set(i, j, (*c)[i]);
  }
  SmithForm snf = smith_normal_form(S);
  LocalMatrix reps_in_big = big.basis() * snf.U_inv;
  LocalMatrix to_new = snf.U * big.coordinate_map();
  std::vector<int> keep;
  for (int i = 0; i < k; ++i) {
    int e = i < snf.rank ? snf.exponents[i] : 0;
    bool free = i >= snf.rank;
    if (!free && e == 0) continue;
    keep.push_back(i);
    reps_.push_back(reps_in_big.column(i));
    exponents_.push_back(free ? 0 : e);
  }
  coord_ = to_new.select_rows(keep);
}

GroupValue Quotient::value() const {
  GroupValue g;
  std::vector<int> tors;
  for (int e : exponents_) {
    if (e == 0)
      ++g.free_rank;
    else
      tors.push_back(e);
  }
  return GroupValue(g.free_rank, tors);
}

Vec Quotient::reduce(const Vec& coords) const {
  const Ring ring = big_.ring();
  Vec out(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    if (exponents_[i] == 0 || ring.field)
      out[i] = coords[i];
    else
      out[i] = Scalar(residue(coords[i], ring.p, exponents_[i]));
  }
  return out;
}

Vec Quotient::classify(const Vec& x) const {
  if (!big_.contains(x)) throw std::invalid_argument("Quotient::classify: element outside the numerator");
  return reduce(coord_.apply(x));
}

bool Quotient::is_zero_class(const Vec& x) const {
  for (const auto& c : classify(x))
    if (c != 0) return false;
  return true;
}

bool Quotient::same_class(const Vec& a, const Vec& b) const { return classify(a) == classify(b); }

Vec Quotient::lift(const Vec& coords) const {
  Vec out(big_.ambient());
  for (int i = 0; i < size(); ++i) {
    if (coords[i] == 0) continue;
    for (int j = 0; j < big_.ambient(); ++j) out[j] += coords[i] * reps_[i][j];
  }
  if (big_.ring().field)
    for (auto& e : out) e = normalize(e, big_.ring());
  return out;
}

}  // namespace thhku
