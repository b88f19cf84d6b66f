#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>

namespace thhku {

// Elements of Z_(p) are rationals whose denominators are prime to p.
using Scalar = mpq_class;

inline constexpr int kInfiniteValuation = INT_MAX;

// Coefficient ring tag. `field` selects F_p; otherwise Z_(p).
struct Ring {
  long p = 3;
  bool field = false;

  bool operator==(const Ring&) const = default;
  std::string name() const;
};

mpz_class ipow(long p, int e);

// Exponent of p in n; kInfiniteValuation for n == 0.
int nu(long long n, long p);
int valuation(const mpz_class& n, long p);
int valuation(const Scalar& q, long p);

// Valuation as seen by the ring: every nonzero element of F_p is a unit.
int valuation(const Scalar& q, const Ring& ring);

bool is_p_local(const Scalar& q, long p);

// Canonical representative: unchanged over Z_(p), an integer in [0, p) over F_p.
Scalar normalize(const Scalar& q, const Ring& ring);

// Integer representative of q modulo p^e, in [0, p^e). Requires q p-local.
mpz_class residue(const Scalar& q, long p, int e);

// Multiplicative inverse of a p-local unit.
Scalar unit_inverse(const Scalar& q, const Ring& ring);

std::string to_string(const Scalar& q);

}  // namespace thhku
