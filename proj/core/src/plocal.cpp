#include "thhku/plocal.hpp"

#include <stdexcept>

namespace thhku {

std::string Ring::name() const {
  return (field ? "F_" : "Z_(") + std::to_string(p) + (field ? "" : ")");
}

mpz_class ipow(long p, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

int nu(long long n, long p) {
  if (n == 0) return kInfiniteValuation;
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const mpz_class& n, long p) {
  if (n == 0) return kInfiniteValuation;
  mpz_class m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

int valuation(const Scalar& q, long p) { return valuation(q.get_num(), p); }

int valuation(const Scalar& q, const Ring& ring) {
  if (q == 0) return kInfiniteValuation;
  return ring.field ? 0 : valuation(q, ring.p);
}

bool is_p_local(const Scalar& q, long p) {
  return !mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p));
}

Scalar normalize(const Scalar& q, const Ring& ring) {
  if (!ring.field) return q;
  return Scalar(residue(q, ring.p, 1));
}

mpz_class residue(const Scalar& q, long p, int e) {
  if (!is_p_local(q, p)) throw std::domain_error("residue: denominator divisible by p");
  mpz_class m = ipow(p, e);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0 && m != 1)
    throw std::domain_error("residue: non-invertible denominator");
  mpz_class r = (q.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

Scalar unit_inverse(const Scalar& q, const Ring& ring) {
  if (q == 0) throw std::domain_error("unit_inverse: zero");
  if (ring.field) {
    mpz_class inv;
    mpz_class r = residue(q, ring.p, 1);
    mpz_class pp = ring.p;
    mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
    return Scalar(inv);
  }
  Scalar r = 1 / q;
  return r;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace thhku
