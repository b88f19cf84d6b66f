#include "thhku/thh_presentations.hpp"

#include <stdexcept>

namespace thhku {

namespace {

long long lpow(long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// p^n + ... + p, the v1-exponent that matches u^{p^{n+1} - p} after v1 = u^{p-1}.
long long geometric(long p, int n) {
  long long s = 0;
  for (int i = 1; i <= n; ++i) s += lpow(p, i);
  return s;
}

PresTerm term(int gen, int power = 0, Scalar coeff = 1) { return {coeff, power, gen}; }

// Decompose N = a p^n with p not dividing a.
std::pair<long long, int> split(long long N, long p) {
  int n = 0;
  while (N % p == 0) {
    N /= p;
    ++n;
  }
  return {N, n};
}

}  // namespace

void require_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime (p = 2 gives ku = ℓ)");
  for (long q = 3; q * q <= p; q += 2)
    if (p % q == 0) throw std::invalid_argument("p must be prime");
}

std::string mu_name(int h, const std::string& middle, long long N) {
  std::string out;
  if (h == 1) out = "v₀";
  if (h > 1) out = "v₀^" + std::to_string(h);
  return out + middle + "μ_" + std::to_string(N);
}

Presentation presentation_thh_l(long p, int D) {
  require_odd_prime(p);
  Presentation P;
  P.title = "THH_*(ℓ)";
  P.p = p;
  P.bound = D;
  P.variable = "v₁";
  P.variable_degree = static_cast<int>(2 * p - 2);
  const int one = P.add_generator("1", 0);
  (void)one;
  const int sv = P.add_generator("σv₁", static_cast<int>(2 * p - 1));
  // Torsion-free part: v0^n μ_{p^{n+1}}.
  std::vector<int> free_mu;
  for (int n = 0; 2 * lpow(p, n + 1) - 1 <= D; ++n)
    free_mu.push_back(P.add_generator(mu_name(n, "", lpow(p, n + 1)), static_cast<int>(2 * lpow(p, n + 1) - 1)));
  P.add_relation({{term(free_mu[0], 0, p)}, {term(sv)}, "p·μ_p = σv₁"});
  for (int n = 1; n < static_cast<int>(free_mu.size()); ++n)
    P.add_relation({{term(free_mu[n], 0, p)}, {term(free_mu[n - 1], static_cast<int>(lpow(p, n)))},
                    "p·v₀^nμ_{p^{n+1}} = v₁^{p^n} v₀^{n-1}μ_{p^n}"});
  // Torsion: v0^h σv1 μ_{ap^n}, n >= 2, symbols for 0 <= h <= n-1.
  const int base = static_cast<int>(2 * p - 2);  // |σv1 μ_N| = 2N + 2p - 2
  std::map<std::pair<long long, int>, int> gen;  // (N, h)
  for (long long N = p * p; 2 * N + base <= D; N += p * p) {
    auto [a, n] = split(N, p);
    for (int h = 0; h <= n - 1; ++h)
      gen[{N, h}] = P.add_generator(mu_name(h, "σv₁", N), static_cast<int>(2 * N + base));
  }
  for (const auto& [key, g] : gen) {
    const auto [N, h] = key;
    const auto [a, n] = split(N, p);
    if (h == n - 1) {
      P.add_relation({{term(g)}, {}, "v₀^hσv₁μ_{ap^n} = 0, h >= n-1"});
      continue;
    }
    P.add_relation({{term(g, static_cast<int>(geometric(p, n - h - 1)))}, {}, "v₁^{p^{n-h-1}+...+p} kills"});
    const bool case3 = h == 0 && a % p == p - 1 && a > p - 1;
    if (case3) {
      const long long b = (a - (p - 1)) / p;
      const int vb = nu(b, p);
      const long long target = b * lpow(p, n + 1);
      const int t = gen.at({target, vb});
      P.add_relation({{term(g, 0, p)}, {term(gen.at({N, 1})), term(t, static_cast<int>(lpow(p, n)))},
                      "p·σv₁μ_{(bp+p-1)p^n} = v₀σv₁μ + v₁^{p^n} v₀^{ν(b)}σv₁μ_{bp^{n+1}}"});
    } else {
      P.add_relation({{term(g, 0, p)}, {term(gen.at({N, h + 1}))}, "p·v₀^h = v₀^{h+1}"});
    }
  }
  return P;
}

Presentation presentation_thh_ku_modv1(long p, int D) {
  require_odd_prime(p);
  Presentation P;
  P.title = "THH_*(ku;ku/v₁)";
  P.p = p;
  P.bound = D;
  P.truncation = static_cast<int>(p - 1);
  P.add_generator("1", 0);
  const int su = P.add_generator("σu", 3);
  const int mup = P.add_generator(mu_name(0, "", p), static_cast<int>(2 * p - 1));
  P.add_relation({{term(su, static_cast<int>(p - 2))}, {term(mup, 0, p)}, "u^{p-2}·σu = p·μ_p"});
  for (long long k = 1; 2 * k * p - 1 <= D; ++k) {
    const Scalar tors(ipow(p, nu(k, p) + 1));
    if (k >= 2) {
      const int v0 = P.add_generator(mu_name(1, "", k * p), static_cast<int>(2 * k * p - 1));
      if (2 * k * p + 1 <= D) {
        const int um = P.add_generator("uμ_" + std::to_string(k * p), static_cast<int>(2 * k * p + 1), 1);
        P.add_relation({{term(v0, 1)}, {term(um, 0, p)}, "u·v₀μ_{kp} = p·uμ_{kp}"});
        P.add_relation({{term(um, 0, tors)}, {}, "p^{ν(k)+1}·uμ_{kp} = 0"});
        // uμ_{kp} is its own symbol, so u^{p-1}μ_{kp} = 0 is imposed here. An
        // exponent of p-3 would kill u^{p-2}μ_{kp}, which survives.
        P.add_relation({{term(um, static_cast<int>(p - 2))}, {}, "u^{p-2}·uμ_{kp} = 0"});
      }
      P.add_relation({{term(v0, 0, Scalar(ipow(p, nu(k, p))))}, {}, "p^{ν(k)}·v₀μ_{kp} = 0"});
    } else if (2 * p + 1 <= D) {
      // u μ_p is u times the generator μ_p; it carries order p.
      P.add_relation({{term(mup, 1, p)}, {}, "p·uμ_p = 0"});
    }
    if (2 * k * p + 2 <= D) {
      const int sm = P.add_generator("σuμ_" + std::to_string(k * p), static_cast<int>(2 * k * p + 2));
      P.add_relation({{term(sm, 0, tors)}, {}, "p^{ν(k)+1}·σuμ_{kp} = 0"});
      P.add_relation({{term(sm, static_cast<int>(p - 2), Scalar(ipow(p, nu(k, p))))}, {},
                      "p^{ν(k)}u^{p-2}·σuμ_{kp} = 0"});
    }
  }
  return P;
}

Presentation presentation_thh_ku(long p, int D) {
  require_odd_prime(p);
  Presentation P;
  P.title = "THH_*(ku)";
  P.p = p;
  P.bound = D;
  P.add_generator("1", 0);
  const int su = P.add_generator("σu", 3);
  std::vector<int> free_mu;
  for (int n = 0; 2 * lpow(p, n + 1) - 1 <= D; ++n)
    free_mu.push_back(P.add_generator(mu_name(n, "", lpow(p, n + 1)), static_cast<int>(2 * lpow(p, n + 1) - 1)));
  if (!free_mu.empty())
    P.add_relation({{term(free_mu[0], 0, p)}, {term(su, static_cast<int>(p - 2))}, "p·μ_p = u^{p-2}σu"});
  for (int n = 1; n < static_cast<int>(free_mu.size()); ++n)
    P.add_relation({{term(free_mu[n], 0, p)},
                    {term(free_mu[n - 1], static_cast<int>(lpow(p, n + 1) - lpow(p, n)))},
                    "p·v₀^nμ_{p^{n+1}} = u^{p^{n+1}-p^n} v₀^{n-1}μ_{p^n}"});
  // Torsion: v0^h σu μ_{ap^n}, n >= 1, symbols for 0 <= h <= n.
  std::map<std::pair<long long, int>, int> gen;
  for (long long N = p; 2 * N + 2 <= D; N += p) {
    auto [a, n] = split(N, p);
    for (int h = 0; h <= n; ++h) gen[{N, h}] = P.add_generator(mu_name(h, "σu", N), static_cast<int>(2 * N + 2));
  }
  for (const auto& [key, g] : gen) {
    const auto [N, h] = key;
    const auto [a, n] = split(N, p);
    if (h == n) {
      P.add_relation({{term(g)}, {}, "v₀^hσuμ_{ap^n} = 0, h >= n"});
      continue;
    }
    P.add_relation({{term(g, static_cast<int>(lpow(p, n - h) - 2))}, {}, "u^{p^{n-h}-2} kills"});
    const bool case3 = h == 0 && a % p == p - 1 && a > p - 1;
    if (case3) {
      const long long b = (a - (p - 1)) / p;
      const int t = gen.at({b * lpow(p, n + 1), nu(b, p)});
      P.add_relation({{term(g, 0, p)},
                      {term(gen.at({N, 1})), term(t, static_cast<int>(lpow(p, n + 1) - lpow(p, n)))},
                      "p·σuμ_{(bp+p-1)p^n} = v₀σuμ + u^{p^{n+1}-p^n} v₀^{ν(b)}σuμ_{bp^{n+1}}"});
    } else {
      P.add_relation({{term(g, 0, p)}, {term(gen.at({N, h + 1}))}, "p·v₀^h = v₀^{h+1}"});
    }
  }
  return P;
}

Presentation presentation_cokernel(long p, int D) {
  require_odd_prime(p);
  Presentation P;
  P.title = "C";
  P.p = p;
  P.bound = D;
  P.truncation = static_cast<int>(p - 2);
  P.add_generator("σu", 3);
  for (long long N = p; 2 * N + 2 <= D; N += p) {
    const int g = P.add_generator(mu_name(0, "σu", N), static_cast<int>(2 * N + 2));
    P.add_relation({{term(g, 0, Scalar(ipow(p, nu(N, p))))}, {}, "p^n·σuμ_{ap^n} = 0"});
  }
  return P;
}

Presentation presentation_ku_tensor_thh_l(long p, int D) {
  Presentation P = base_change(presentation_thh_l(p, D), "u", 2, static_cast<int>(p - 1));
  P.title = "ku_* ⊗ THH_*(ℓ)";
  return P;
}

std::vector<std::vector<PresTerm>> extension_of_scalars_images(const Presentation& src, const Presentation& ku) {
  const int pm2 = static_cast<int>(src.p - 2);
  std::vector<std::vector<PresTerm>> out;
  for (const auto& g : src.generators) {
    const std::string& name = g.name;
    auto pos = name.find("σv₁");
    if (pos == std::string::npos) {
      const int t = ku.index_of(name);
      if (t < 0) throw PresentationError("no image for generator " + name);
      out.push_back({term(t)});
      continue;
    }
    std::string renamed = name;
    renamed.replace(pos, std::string("σv₁").size(), "σu");
    const int t = ku.index_of(renamed);
    if (t < 0) throw PresentationError("no image for generator " + name);
    out.push_back({term(t, pm2)});
  }
  return out;
}

}  // namespace thhku
