#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topomon/pointset.hpp"
#include "topomon/topology.hpp"

namespace topomon {

struct Triple {
  std::uint32_t src = 0;
  std::uint32_t event = 0;  // index into the alphabet
  std::uint32_t dst = 0;

  auto operator<=>(const Triple&) const = default;
};

/// A transition relation R ⊆ X × E × X over a finite state set and a finite
/// event alphabet. Triples are kept sorted and duplicate-free.
class TransitionSystem {
 public:
  TransitionSystem(std::size_t n_states, std::vector<std::string> alphabet,
                   std::vector<Triple> triples);

  std::size_t n_states() const { return n_states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Triple>& triples() const { return triples_; }

  /// Event indices ordered by event name; witness strings are built in this
  /// order so ties resolve lexicographically.
  const std::vector<std::uint32_t>& events_by_name() const { return events_by_name_; }

  /// Pre_e(U) = { q | ∃q' (q,e,q') ∈ R and q' ∈ U }: the states from which
  /// one e-step can land in U.
  PointSet pre(std::uint32_t event, const PointSet& u) const;

 private:
  std::size_t n_states_;
  std::vector<std::string> alphabet_;
  std::vector<Triple> triples_;
  std::vector<std::uint32_t> events_by_name_;
  std::vector<std::vector<PointSet>> successors_;  // successors_[e][q]
};

/// Sequence of event indices; denotes the set U_s of states from which the
/// whole string is executable.
using EventString = std::vector<std::uint32_t>;

std::string event_string_to_string(const TransitionSystem& t, const EventString& s);

struct SubbasisEntry {
  PointSet set;
  EventString witness;  // a shortest string denoting the set, lexicographic tie-break
};

/// The distinct values U_s together with minimal witnesses. Contains U_ε (the
/// full state set) and is closed under every Pre_e; the empty set, when it
/// arises, appears once.
struct SubbasisFamily {
  std::vector<SubbasisEntry> entries;

  bool contains(const PointSet& u) const;
};

/// Breadth-first fixpoint of U ↦ Pre_e(U) starting from U_ε, using
/// U_{e·s} = Pre_e(U_s). At most 2^n distinct sets arise.
SubbasisFamily subbasis(const TransitionSystem& t);

/// U_s computed directly by folding Pre along the string.
PointSet string_set(const TransitionSystem& t, const EventString& s);

/// The topology generated by the executability sets, materialized as a
/// finite space: each state's minimal neighbourhood is the intersection of
/// the subbasis sets containing it.
FiniteSpace induced_space(const TransitionSystem& t);

/// Hyperconnectedness of the induced topology, decided on the subbasis: the
/// per-state minimal basic opens must pairwise intersect. (Pairwise
/// intersection of the U_s alone is not enough; basic opens are finite
/// intersections of them.)
bool is_hyperconnected_lts(const TransitionSystem& t);

/// The relation required ∪ {(q,e,q) | e ∈ alphabet} for the smallest state q
/// mentioned in no required or forbidden triple. The result contains every
/// required triple, none of the forbidden ones, and is hyperconnected: q can
/// execute every string. Throws NoFreshStateError when no such q exists.
TransitionSystem extend_to_hyperconnected(const std::vector<Triple>& required,
                                          const std::vector<Triple>& forbidden,
                                          std::size_t n_states, std::vector<std::string> alphabet);

struct GenericityReport {
  double p = 0.0;
  std::size_t samples = 0;
  double hyperconnected_fraction = 0.0;
  double sigma02_fraction = 0.0;
  std::uint64_t seed = 0;
};

/**
 * Draw `samples` random transition relations over n states and the given
 * alphabet, each triple included independently with probability p, and
 * report which fraction induces a hyperconnected topology and which fraction
 * classifies into the Σ⁰₂-or-lower branch.
 *
 * Sample i uses its own SplitMix64 stream derived from (seed, i), so the
 * report is bit-identical whatever the value of jobs. This is a statistical
 * probe of finite truncations; category-theoretic genericity on the
 * countable space is a different notion and is not asserted here.
 */
GenericityReport genericity_sample(std::size_t n_states, const std::vector<std::string>& alphabet,
                                   double p, std::size_t samples, std::uint64_t seed,
                                   unsigned jobs = 1);

}  // namespace topomon
