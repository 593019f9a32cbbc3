#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "topomon/lts.hpp"
#include "topomon/topology.hpp"

namespace topomon::testing {

/// Every valid minimal-neighbourhood map on n points, by filtering all
/// reflexive candidate maps for the coherence law. Exhaustive, so only
/// sensible for n <= 4 (8^4 candidates there).
inline std::vector<FiniteSpace> all_spaces(std::size_t n) {
  std::vector<FiniteSpace> out;
  const unsigned long subsets = 1ul << n;
  std::vector<unsigned long> choice(n, 0);

  auto emit_if_valid = [&]() {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if ((choice[x] >> y) & 1ul)
          if ((choice[y] & ~choice[x]) != 0) return;
    std::vector<PointSet> mo;
    mo.reserve(n);
    for (std::size_t x = 0; x < n; ++x) mo.emplace_back(n, choice[x]);
    out.emplace_back(std::move(mo));
  };

  auto recurse = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      emit_if_valid();
      return;
    }
    for (unsigned long mask = 0; mask < subsets; ++mask) {
      if (!((mask >> x) & 1ul)) continue;  // reflexivity
      choice[x] = mask;
      self(self, x + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

/// All 2^n subsets, ascending bit patterns.
inline std::vector<PointSet> all_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) out.emplace_back(n, mask);
  return out;
}

/// A random valid space: a random reflexive candidate map, closed under the
/// coherence law by iterating minopen[x] |= minopen[y] to a fixpoint.
inline FiniteSpace random_space(std::mt19937_64& rng, std::size_t n, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  std::vector<PointSet> mo(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    mo[x].set(x);
    for (std::size_t y = 0; y < n; ++y)
      if (coin(rng)) mo[x].set(y);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (auto y = mo[x].find_first(); y != PointSet::npos; y = mo[x].find_next(y))
        if (!mo[y].is_subset_of(mo[x])) {
          mo[x] |= mo[y];
          changed = true;
        }
  }
  return FiniteSpace(std::move(mo));
}

inline PointSet random_subset(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  PointSet out(n);
  for (std::size_t x = 0; x < n; ++x)
    if (coin(rng)) out.set(x);
  return out;
}

/// Independent closure oracle: x lies in Cl(A) iff every open set containing
/// x meets A. Quantifies over all opens, unlike the minopen formula.
inline PointSet closure_via_opens(const FiniteSpace& s, const PointSet& a) {
  const auto opens = enumerate_opens(s);
  PointSet out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool in_closure = true;
    for (const PointSet& u : opens)
      if (u.test(x) && !u.intersects(a)) {
        in_closure = false;
        break;
      }
    if (in_closure) out.set(x);
  }
  return out;
}

inline TransitionSystem random_system(std::mt19937_64& rng, std::size_t max_states = 5,
                                      std::size_t max_events = 3, double density = 0.3) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_states);
  std::uniform_int_distribution<std::size_t> e_dist(1, max_events);
  const std::size_t n = n_dist(rng);
  const std::size_t e_count = e_dist(rng);
  std::vector<std::string> alphabet;
  for (std::size_t e = 0; e < e_count; ++e) alphabet.emplace_back(1, static_cast<char>('a' + e));
  std::bernoulli_distribution coin(density);
  std::vector<Triple> triples;
  for (std::uint32_t q = 0; q < n; ++q)
    for (std::uint32_t e = 0; e < e_count; ++e)
      for (std::uint32_t r = 0; r < n; ++r)
        if (coin(rng)) triples.push_back(Triple{q, e, r});
  return TransitionSystem(n, std::move(alphabet), std::move(triples));
}

/// Direct executability semantics: the string s can be run from state q by
/// explicit path search.
inline bool executable_from(const TransitionSystem& t, std::uint32_t q, const EventString& s,
                            std::size_t at = 0) {
  if (at == s.size()) return true;
  for (const Triple& tr : t.triples())
    if (tr.src == q && tr.event == s[at] && executable_from(t, tr.dst, s, at + 1)) return true;
  return false;
}

inline PointSet executable_set(const TransitionSystem& t, const std::vector<EventString>& strings) {
  PointSet out(t.n_states());
  for (std::uint32_t q = 0; q < t.n_states(); ++q) {
    bool all = true;
    for (const EventString& s : strings)
      if (!executable_from(t, q, s)) {
        all = false;
        break;
      }
    if (all) out.set(q);
  }
  return out;
}

}  // namespace topomon::testing
