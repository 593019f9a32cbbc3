#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "topomon/rng.hpp"
#include "topomon/symbolic.hpp"

namespace topomon {

/// α ∈ 2^(ℕ×ℕ) presented column-wise; structurally the same presentation as
/// a grid subset, reread as a two-dimensional bit matrix.
using GridAlpha = GridSet;

/// Some column of α carries infinitely many zeros.
bool in_s3(const GridAlpha& alpha);

/// The continuous map α ↦ { (m, 2n) | α(m,n) = 0 }: each column word is
/// complemented and interleaved with zeros (odd rows stay empty), then
/// canonicalized.
GridSet grid_reduction(const GridAlpha& alpha);

/// Checks the transfer property on one input: α has a zero-rich column
/// exactly when the image fails to be monitorable. Returns true iff the two
/// sides agree; the contract is that they always do.
bool certify_grid_reduction(const GridAlpha& alpha);

/// A tree on ℕ: a finite prefix-closed set of sequences, optionally extended
/// along a single infinite branch u·k^ω. One spine suffices to present
/// ill-foundedness and keeps the well-foundedness check trivial.
struct TreePresentation {
  std::set<Sequence> explicit_nodes;
  std::optional<std::pair<Sequence, std::uint32_t>> spine;

  auto operator<=>(const TreePresentation&) const = default;
};

/// Throws std::invalid_argument when the explicit part is not prefix-closed
/// or the spine base is not an explicit node.
void validate_tree(const TreePresentation& t);

/// No infinite branch: exactly when there is no spine.
bool is_well_founded(const TreePresentation& t);

/// The identity embedding of the tree into the Scott space: nodes become
/// explicit members, the spine stays a spine, the top point stays out.
ScottSet tree_reduction(const TreePresentation& t);

/// Checks the transfer property on one tree: well-founded iff the image is
/// monitorable. Returns true iff the two sides agree.
bool certify_tree_reduction(const TreePresentation& t);

struct CertificationReport {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty(); }
};

/// A random column-wise α: preperiods up to 4 bits, periods up to 4 bits,
/// up to 4 exceptional columns with indices below 10.
GridAlpha random_grid_alpha(SplitMix64& g);

/// certify_grid_reduction over `cases` random α drawn from the given seed.
CertificationReport certify_grid_sweep(std::size_t cases, std::uint64_t seed);

/// certify_tree_reduction over every prefix-closed {0,1}-tree of depth at
/// most max_depth, bare and with a spine grafted at each node with each
/// branch label.
CertificationReport certify_tree_sweep(std::size_t max_depth);

/// Render α / a grid subset in the text DSL (used in failure reports).
std::string grid_to_dsl(const GridSet& a);

}  // namespace topomon
