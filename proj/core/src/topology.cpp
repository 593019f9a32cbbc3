#include "topomon/topology.hpp"

#include <stdexcept>

namespace topomon {

std::string SpaceViolation::describe() const {
  if (x == y)
    return "point " + std::to_string(x) + " is missing from its own minimal neighbourhood";
  return "minopen[" + std::to_string(y) + "] is not contained in minopen[" + std::to_string(x) +
         "] although " + std::to_string(y) + " lies inside minopen[" + std::to_string(x) + "]";
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<PointSet> mo(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) mo[x].set(x);
  return FiniteSpace(std::move(mo));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) {
  std::vector<PointSet> mo(n, ~PointSet(n));
  return FiniteSpace(std::move(mo));
}

FiniteSpace FiniteSpace::discrete_plus_indiscrete(std::size_t k) {
  const std::size_t n = k + 2;
  std::vector<PointSet> mo(n, PointSet(n));
  for (std::size_t x = 0; x < k; ++x) mo[x].set(x);
  mo[k].set(k);
  mo[k].set(k + 1);
  mo[k + 1] = mo[k];
  return FiniteSpace(std::move(mo));
}

std::optional<SpaceViolation> FiniteSpace::validate() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (minopen_[x].size() != n)
      throw std::invalid_argument("minopen[" + std::to_string(x) + "] has wrong arity");
    if (!minopen_[x].test(x)) return SpaceViolation{x, x};
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = minopen_[x].find_first(); y != PointSet::npos; y = minopen_[x].find_next(y))
      if (!minopen_[y].is_subset_of(minopen_[x])) return SpaceViolation{x, y};
  return std::nullopt;
}

void FiniteSpace::check_arity(const PointSet& a) const {
  if (a.size() != size()) throw std::invalid_argument("point set does not match the space arity");
}

void FiniteSpace::check_open(const PointSet& u) const {
  if (!is_open(u)) throw std::invalid_argument("expected an open set");
}

PointSet FiniteSpace::closure(const PointSet& a) const {
  check_arity(a);
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (minopen_[x].intersects(a)) out.set(x);
  return out;
}

PointSet FiniteSpace::interior(const PointSet& a) const {
  check_arity(a);
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (minopen_[x].is_subset_of(a)) out.set(x);
  return out;
}

PointSet FiniteSpace::frontier(const PointSet& a) const { return closure(a) - interior(a); }

PointSet FiniteSpace::regularization(const PointSet& a) const { return interior(closure(a)); }

bool FiniteSpace::is_open(const PointSet& u) const {
  check_arity(u);
  for (auto x = u.find_first(); x != PointSet::npos; x = u.find_next(x))
    if (!minopen_[x].is_subset_of(u)) return false;
  return true;
}

bool FiniteSpace::is_dense_in(const PointSet& a, const PointSet& u) const {
  check_open(u);
  return u.is_subset_of(closure(a));
}

bool FiniteSpace::is_codense_in(const PointSet& a, const PointSet& u) const {
  check_open(u);
  return u.is_subset_of(closure(~a));
}

bool FiniteSpace::is_regular_open(const PointSet& u) const { return regularization(u) == u; }

bool FiniteSpace::is_nowhere_dense(const PointSet& a) const { return regularization(a).none(); }

PointSet FiniteSpace::isolated_points() const {
  PointSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (minopen_[x].count() == 1) out.set(x);
  return out;
}

std::vector<PointSet> enumerate_opens(const FiniteSpace& s, std::size_t max_points) {
  const std::size_t n = s.size();
  if (n > max_points)
    throw SizeGuardError("enumerate_opens: space has " + std::to_string(n) +
                         " points, guard is " + std::to_string(max_points));
  std::vector<unsigned long> mo(n);
  for (std::size_t x = 0; x < n; ++x) mo[x] = s.minopen(x).to_ulong();

  std::vector<PointSet> opens;
  const unsigned long limit = 1ul << n;
  for (unsigned long mask = 0; mask < limit; ++mask) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x)
      if ((mask >> x) & 1ul) open = (mo[x] & ~mask) == 0;
    if (open) opens.emplace_back(n, mask);
  }
  return opens;
}

}  // namespace topomon
