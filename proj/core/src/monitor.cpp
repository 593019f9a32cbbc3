#include "topomon/monitor.hpp"

#include <algorithm>

namespace topomon {

namespace {

MonitorVerdict verdict_from_bad_region(const FiniteSpace& s, const PointSet& bad) {
  if (bad.none()) return MonitorVerdict{true, std::nullopt};
  return MonitorVerdict{false, s.minopen(bad.find_first())};
}

}  // namespace

MonitorVerdict is_monitorable_frontier(const FiniteSpace& s, const PointSet& a) {
  return verdict_from_bad_region(s, s.interior(s.frontier(a)));
}

MonitorVerdict is_monitorable_basis(const FiniteSpace& s, const PointSet& a) {
  const PointSet cl_a = s.closure(a);
  const PointSet cl_co = s.closure(~a);
  PointSet bad(s.size());
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.minopen(x).is_subset_of(cl_a) && s.minopen(x).is_subset_of(cl_co)) bad.set(x);
  return verdict_from_bad_region(s, bad);
}

bool is_monitorable_oracle(const FiniteSpace& s, const PointSet& a, std::size_t max_points) {
  for (const PointSet& u : enumerate_opens(s, max_points)) {
    if (u.none()) continue;
    if (s.is_dense_in(a, u) && s.is_codense_in(a, u)) return false;
  }
  return true;
}

Decomposition decompose(const FiniteSpace& s, const PointSet& m) {
  if (!is_monitorable_frontier(s, m).monitorable)
    throw NotMonitorableError("decompose: the set is not monitorable");
  PointSet regular = s.regularization(m);
  PointSet rest = m ^ regular;
  return Decomposition{std::move(regular), std::move(rest)};
}

bool nd_equivalent(const FiniteSpace& s, const PointSet& a, const PointSet& b) {
  return s.is_nowhere_dense(a ^ b);
}

std::vector<PointSet> monitorable_family(const FiniteSpace& s, std::size_t max_points) {
  const std::size_t n = s.size();
  if (n > max_points)
    throw SizeGuardError("monitorable_family: space has " + std::to_string(n) +
                         " points, guard is " + std::to_string(max_points));
  std::vector<PointSet> family;
  const unsigned long limit = 1ul << n;
  for (unsigned long mask = 0; mask < limit; ++mask) {
    PointSet a(n, mask);
    if (is_monitorable_frontier(s, a).monitorable) family.push_back(std::move(a));
  }
  return family;
}

std::vector<PointSet> minimal_opens(const FiniteSpace& s) {
  std::vector<PointSet> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const PointSet& u = s.minopen(x);
    if (u.find_first() != x) continue;  // report each set once, at its smallest member
    bool minimal = true;
    for (auto y = u.find_first(); y != PointSet::npos && minimal; y = u.find_next(y))
      minimal = (s.minopen(y) == u);
    if (minimal) out.push_back(u);
  }
  return out;
}

HLSplit compute_h_l(const FiniteSpace& s) {
  PointSet h(s.size());
  for (const PointSet& u : minimal_opens(s)) h |= u;
  PointSet l = s.interior(~h);
  return HLSplit{std::move(h), std::move(l)};
}

FiniteSpace open_subspace(const FiniteSpace& s, const PointSet& l,
                          std::vector<std::size_t>* index_map) {
  if (!s.is_open(l)) throw std::invalid_argument("open_subspace: subset is not open");
  std::vector<std::size_t> points = to_indices(l);
  std::vector<std::size_t> reverse(s.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) reverse[points[i]] = i;

  std::vector<PointSet> mo(points.size(), PointSet(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointSet within = s.minopen(points[i]) & l;
    for (auto y = within.find_first(); y != PointSet::npos; y = within.find_next(y))
      mo[i].set(reverse[y]);
  }
  if (index_map) *index_map = std::move(points);
  return FiniteSpace(std::move(mo));
}

bool is_monitorable_decomposed(const FiniteSpace& s, const PointSet& a) {
  for (const PointSet& u : minimal_opens(s))
    if (u.intersects(a) && !u.is_subset_of(a)) return false;
  const HLSplit hl = compute_h_l(s);
  std::vector<std::size_t> points;
  const FiniteSpace sub = open_subspace(s, hl.l, &points);
  PointSet a_in_l(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (a.test(points[i])) a_in_l.set(i);
  return is_monitorable_frontier(sub, a_in_l).monitorable;
}

bool is_hyperconnected(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y)
      if (!s.minopen(x).intersects(s.minopen(y))) return false;
  return true;
}

bool is_monitorable_hyperconnected(const FiniteSpace& s, const PointSet& a) {
  if (s.size() == 0) throw NotHyperconnectedError("the fast decider needs a non-empty space");
  if (!is_hyperconnected(s)) throw NotHyperconnectedError("the space is not hyperconnected");
  return s.interior(a).any() || s.interior(~a).any();
}

}  // namespace topomon
