#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topomon/monitor.hpp"
#include "topomon/topology.hpp"

namespace topomon {

/// Position of the family of monitorable sets, as far as the classification
/// procedure can tell.
enum class ClassTag { AllSets, Sigma02Branch, Pi03Complete, Pi11Complete, Unknown };

/// Exact position inside the Σ⁰₂ branch, attached only where a built-in
/// presentation certifies it.
enum class Refinement { Clopen, Closed, Sigma02Complete };

std::string to_string(ClassTag tag);
std::string to_string(Refinement r);

/// Answer to "how many pairwise disjoint non-empty open subsets fit inside
/// L?". Either a proven finite maximum, or witnesses produced on demand,
/// optionally with a certificate that the generator never runs dry.
struct DisjointFamilyReport {
  std::optional<std::size_t> bound;
  std::vector<std::string> witnesses;
  bool certified_unbounded = false;
};

/**
 * Capabilities a space must expose to be classified. Finite spaces derive
 * everything from the minimal-neighbourhood map; the built-in countable
 * spaces hardcode their structural analysis together with executable witness
 * generators.
 */
class SpacePresentation {
 public:
  virtual ~SpacePresentation() = default;

  virtual bool isolated_points_dense() const = 0;
  virtual bool second_countable() const = 0;
  virtual std::string minimal_opens_summary() const = 0;
  virtual DisjointFamilyReport disjoint_opens_in_l(std::size_t max_witnesses) const = 0;

  /// Certified refinement of the Σ⁰₂ verdict, when known.
  virtual std::optional<Refinement> exact_refinement() const { return std::nullopt; }
  /// True when the presentation carries a proof that the family of
  /// monitorable sets is hardest at the coanalytic level.
  virtual bool coanalytic_completeness_certificate() const { return false; }
  /// Free-form caveat recorded into the verdict evidence.
  virtual std::string note() const { return {}; }
};

struct ClassifyEvidence {
  bool isolated_points_dense = false;
  std::string minimal_opens;
  std::optional<std::size_t> disjoint_bound;
  std::vector<std::string> disjoint_witnesses;
  bool unbounded_family_certified = false;
  std::string note;
};

struct ComplexityVerdict {
  ClassTag tag = ClassTag::Unknown;
  std::optional<Refinement> refinement;
  ClassifyEvidence evidence;
  std::size_t budget_used = 0;
};

/**
 * The classification procedure. Isolated points dense => every set is
 * monitorable. Otherwise, in the second countable case, strip the union H of
 * all minimal non-empty opens and look inside L = Int(X \ H): a bounded
 * disjoint-open family keeps the verdict in the Σ⁰₂ branch, a certified
 * unbounded one pushes it to Π⁰₃-complete, and an inconclusive search at the
 * given budget yields Unknown. Non-second-countable presentations report
 * Π¹₁-complete exactly when they carry the certificate.
 *
 * budget must be ≥ 1. Raising it never changes a non-Unknown verdict.
 */
ComplexityVerdict classify(const SpacePresentation& p, std::size_t budget);

/// Adapter for a finite space. Always reports a bounded disjoint family (at
/// most n sets fit), so the verdict is AllSets or the Σ⁰₂ branch.
std::unique_ptr<SpacePresentation> finite_presentation(FiniteSpace s);

/// Built-in presentations of the countable example spaces. Accepted names:
/// discrete(n), indiscrete(n), sum(k), cofinite, grid, scott. Throws
/// std::invalid_argument for anything else.
std::unique_ptr<SpacePresentation> builtin_presentation(const std::string& name);

}  // namespace topomon
