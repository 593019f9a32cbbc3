#pragma once

#include <optional>
#include <vector>

#include "topomon/topology.hpp"

namespace topomon {

/// Outcome of a monitorability decision. When the set is not monitorable the
/// witness is a non-empty open set in which the tested set is simultaneously
/// dense and codense; deterministically it is minopen[x] for the smallest
/// point x inside Int(Fr A).
struct MonitorVerdict {
  bool monitorable = true;
  std::optional<PointSet> witness;
};

/// The unique pair (regular open O, nowhere dense N) with O △ N equal to a
/// given monitorable set.
struct Decomposition {
  PointSet regular_part;
  PointSet nowhere_dense_part;
};

/// Decider via Int(Fr A) = ∅.
MonitorVerdict is_monitorable_frontier(const FiniteSpace& s, const PointSet& a);

/// Decider via the minimal-neighbourhood basis: monitorable iff no basic open
/// is contained in both Cl(A) and Cl(X \ A). Agrees with the frontier decider
/// on all inputs.
MonitorVerdict is_monitorable_basis(const FiniteSpace& s, const PointSet& a);

/// Raw-quantifier decider: no non-empty open U has a dense and codense in U.
/// Enumerates every open set, so it is guarded like enumerate_opens.
bool is_monitorable_oracle(const FiniteSpace& s, const PointSet& a,
                           std::size_t max_points = kDefaultOpensGuard);

/// Throws NotMonitorableError when m is not monitorable; the decomposition is
/// only defined on M(X).
Decomposition decompose(const FiniteSpace& s, const PointSet& m);

/// A and B differ by a nowhere dense set. (The relation usually written E;
/// renamed here so it cannot be confused with an event alphabet.)
bool nd_equivalent(const FiniteSpace& s, const PointSet& a, const PointSet& b);

/// All monitorable subsets, in ascending bit-pattern order. Guarded: 2^n sets.
std::vector<PointSet> monitorable_family(const FiniteSpace& s,
                                         std::size_t max_points = kDefaultOpensGuard);

/// The distinct minimal non-empty open sets: minopen[x] is minimal iff every
/// y ∈ minopen[x] has minopen[y] = minopen[x]. Ordered by smallest member.
std::vector<PointSet> minimal_opens(const FiniteSpace& s);

/// h = union of all minimal non-empty opens, l = Int(X \ h).
struct HLSplit {
  PointSet h;
  PointSet l;
};
HLSplit compute_h_l(const FiniteSpace& s);

/// Subspace induced on an open subset l; point i of the result is the i-th
/// member of l in ascending order (written to index_map when provided). Open
/// subsets inherit their minimal neighbourhoods unchanged, so this is the
/// genuine subspace topology.
FiniteSpace open_subspace(const FiniteSpace& s, const PointSet& l,
                          std::vector<std::size_t>* index_map = nullptr);

/// Decider through the H/L split: every minimal open is contained in A or
/// misses it, and A ∩ L is monitorable in the subspace L.
bool is_monitorable_decomposed(const FiniteSpace& s, const PointSet& a);

/// Any two non-empty open sets intersect; decided on the minimal
/// neighbourhoods.
bool is_hyperconnected(const FiniteSpace& s);

/// Fast decider valid on non-empty hyperconnected spaces:
/// Int(A) ≠ ∅ or Int(X \ A) ≠ ∅. Throws NotHyperconnectedError otherwise.
bool is_monitorable_hyperconnected(const FiniteSpace& s, const PointSet& a);

}  // namespace topomon
