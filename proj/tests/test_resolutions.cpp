#include <doctest.h>

#include <map>

#include "thhku/resolutions.hpp"

using namespace thhku;

namespace {

using Bigraded = std::map<std::pair<int, int>, GroupValue>;

void add(Bigraded& out, int s, int t, int D) {
  if (s + t > D) return;
  out[{s, t}] = out[{s, t}] + GroupValue::free(1);
}

// The expected Tor groups, written out class by class: (homological, internal).
Bigraded expected(TorCase c, long p, int D) {
  Bigraded out;
  const int q = static_cast<int>(p);
  switch (c) {
    case TorCase::ku_res:  // E(σu), |σu| = (1, 2)
      add(out, 0, 0, D);
      add(out, 1, 2, D);
      break;
    case TorCase::trunc_tensor:  // P_{p-1}(u) ⊗ E(σv1), |σv1| = (1, 2p - 2)
      for (int i = 0; i < q - 1; ++i) {
        add(out, 0, 2 * i, D);
        add(out, 1, 2 * q - 2 + 2 * i, D);
      }
      break;
    case TorCase::divided_power:  // E(σu) ⊗ Γ(φu), |φu| = (2, 2p - 2)
      for (int k = 0; 2 * k + k * (2 * q - 2) <= D; ++k) {
        add(out, 2 * k, k * (2 * q - 2), D);
        add(out, 2 * k + 1, k * (2 * q - 2) + 2, D);
      }
      break;
    case TorCase::rational:  // P(u) ⊗ E(σu)
      for (int i = 0; 2 * i <= D; ++i) {
        add(out, 0, 2 * i, D);
        add(out, 1, 2 + 2 * i, D);
      }
      break;
  }
  return out;
}

Bigraded as_map(const BigradedGroup& g) {
  Bigraded out;
  for (const auto& [key, v] : g.entries())
    if (!v.is_zero()) out[key] = v;
  return out;
}

std::map<int, int> total_ranks(const BigradedGroup& g) {
  std::map<int, int> out;
  for (const auto& [key, v] : g.entries()) out[key.first + key.second] += v.free_rank;
  return out;
}

}  // namespace

TEST_CASE("resolution homology matches the listed classes") {
  for (long p : {3L, 5L})
    for (TorCase c : all_tor_cases()) {
      const int D = static_cast<int>(6 * p);
      const BigradedGroup h = periodic_resolution_homology(resolution_spec(c, p, D), D);
      CHECK_MESSAGE(as_map(h) == expected(c, p, D), to_string(c) << " p=" << p);
      CHECK_MESSAGE(h == tor_closed_form(c, p, D), to_string(c) << " p=" << p);
    }
}

TEST_CASE("total-degree ranks") {
  const std::map<int, int> dp = total_ranks(tor_closed_form(TorCase::divided_power, 3, 6));
  for (int d = 0; d <= 6; ++d) {
    const auto it = dp.find(d);
    CHECK((it == dp.end() ? 0 : it->second) == (d % 3 == 0 ? 1 : 0));
  }
  const std::map<int, int> ku = total_ranks(tor_closed_form(TorCase::ku_res, 3, 10));
  CHECK(ku.count(2) == 0);
  CHECK(ku.at(3) == 1);
  const std::map<int, int> q = total_ranks(tor_closed_form(TorCase::rational, 3, 10));
  CHECK(q.at(0) == 1);
  CHECK(q.at(3) == 1);
  // γ₁φu sits at stage 2.
  CHECK(periodic_resolution_homology(resolution_spec(TorCase::divided_power, 3, 6), 6).at(2, 4) ==
        GroupValue::free(1));
}

TEST_CASE("adding a period changes nothing below the bound") {
  for (long p : {3L, 5L})
    for (TorCase c : all_tor_cases()) CHECK_MESSAGE(stable_under_extra_period(c, p, static_cast<int>(6 * p)), to_string(c));
  const int D = 30;
  CHECK(periodic_resolution_homology(resolution_spec(TorCase::divided_power, 5, D, 2), D) ==
        periodic_resolution_homology(resolution_spec(TorCase::divided_power, 5, D), D));
}

TEST_CASE("invalid patterns are rejected") {
  ResolutionSpec bad = resolution_spec(TorCase::divided_power, 5, 30);
  // u · u is not zero in P_4(u).
  REQUIRE(bad.multipliers.size() >= 2);
  bad.multipliers.resize(2);
  bad.stage_degrees.resize(3);
  bad.multipliers[1] = bad.multipliers[0];
  bad.stage_degrees[2] = bad.stage_degrees[1] + 2;
  CHECK_THROWS_WITH_AS(periodic_resolution_homology(bad, 30), doctest::Contains("stages 1 and 2"), ResolutionError);

  ResolutionSpec torsion = resolution_spec(TorCase::rational, 3, 12);
  // d(σu) = 3 u₂ tensors down to 3u, leaving Z/3 u^k at stage 0.
  torsion.multipliers[0] = torsion.base.scale(torsion.base.generator("u₂"), 3);
  CHECK_THROWS_WITH_AS(periodic_resolution_homology(torsion, 12), doctest::Contains("torsion"), ResolutionError);
}

TEST_CASE("case names round-trip") {
  for (TorCase c : all_tor_cases()) CHECK(parse_tor_case(to_string(c)) == c);
  CHECK_FALSE(parse_tor_case("koszul").has_value());
}
