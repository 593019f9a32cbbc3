#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topomon/errors.hpp"
#include "topomon/pointset.hpp"

namespace topomon {

/// First law broken by a candidate minimal-neighbourhood map: either
/// x ∉ minopen[x] (reported with y == x), or some y ∈ minopen[x] has
/// minopen[y] ⊄ minopen[x].
struct SpaceViolation {
  std::size_t x = 0;
  std::size_t y = 0;

  std::string describe() const;
};

/**
 * A finite topological space presented by minimal open neighbourhoods.
 *
 * Every finite topology is Alexandrov, so it is determined by the map
 * x -> smallest open set containing x. Convention, fixed here and used
 * everywhere: a set U is open iff minopen[x] ⊆ U for every x ∈ U (U is an
 * up-set of the preorder y ∈ minopen[x]), and
 *
 *     Cl(A)  = { x | minopen[x] ∩ A ≠ ∅ }
 *     Int(A) = { x | minopen[x] ⊆ A }
 *
 * The empty space (n = 0) is legal; every operator returns empty results
 * on it. All operations are pure and the type is freely shareable across
 * threads.
 */
class FiniteSpace {
 public:
  FiniteSpace() = default;
  explicit FiniteSpace(std::vector<PointSet> minopen) : minopen_(std::move(minopen)) {}

  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);
  /// Disjoint sum of a k-point discrete block and a 2-point indiscrete block
  /// (points k and k+1).
  static FiniteSpace discrete_plus_indiscrete(std::size_t k);

  std::size_t size() const { return minopen_.size(); }
  const PointSet& minopen(std::size_t x) const { return minopen_[x]; }
  const std::vector<PointSet>& minopen_map() const { return minopen_; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return ~PointSet(size()); }

  /// nullopt iff both representation laws hold; otherwise the first violating
  /// pair in scan order.
  std::optional<SpaceViolation> validate() const;

  PointSet closure(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;
  /// Cl(A) \ Int(A).
  PointSet frontier(const PointSet& a) const;
  /// Int(Cl(A)); always regular open.
  PointSet regularization(const PointSet& a) const;

  bool is_open(const PointSet& u) const;
  bool is_closed(const PointSet& a) const { return is_open(~a); }

  /// U ⊆ Cl(A). Requires u open.
  bool is_dense_in(const PointSet& a, const PointSet& u) const;
  /// U ⊆ Cl(X \ A). Requires u open.
  bool is_codense_in(const PointSet& a, const PointSet& u) const;

  /// U = Int(Cl(U)).
  bool is_regular_open(const PointSet& u) const;
  /// Int(Cl(A)) = ∅.
  bool is_nowhere_dense(const PointSet& a) const;

  /// Points whose singleton is open.
  PointSet isolated_points() const;

 private:
  void check_arity(const PointSet& a) const;
  void check_open(const PointSet& u) const;

  std::vector<PointSet> minopen_;
};

inline constexpr std::size_t kDefaultOpensGuard = 12;

/// Every open set of s, each exactly once, in ascending bit-pattern order.
/// Exhaustive-oracle support: throws SizeGuardError when the space has more
/// than max_points points. Production paths never enumerate opens.
std::vector<PointSet> enumerate_opens(const FiniteSpace& s,
                                      std::size_t max_points = kDefaultOpensGuard);

}  // namespace topomon
