#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace topomon {

/// A subset of the points {0..n-1} of an ambient finite space. The bitset
/// already provides the whole set algebra: & | ^ - ~ ==, is_subset_of,
/// intersects, count, find_first/find_next. operator~ complements within the
/// ambient range, which is exactly complementation in the space.
using PointSet = boost::dynamic_bitset<>;

inline PointSet make_points(std::size_t n, std::initializer_list<std::size_t> members) {
  PointSet s(n);
  for (std::size_t x : members) s.set(x);
  return s;
}

inline PointSet make_points(std::size_t n, const std::vector<std::size_t>& members) {
  PointSet s(n);
  for (std::size_t x : members) s.set(x);
  return s;
}

/// Members in ascending order.
inline std::vector<std::size_t> to_indices(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) out.push_back(x);
  return out;
}

}  // namespace topomon
