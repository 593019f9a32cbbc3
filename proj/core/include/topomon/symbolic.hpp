#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace topomon {

/**
 * The infinite bit sequence preperiod·period^ω, read as a subset of ℕ.
 *
 * Construction canonicalizes: the period is made primitive (not a proper
 * power of a shorter word) and the preperiod as short as possible, so two
 * words denote the same sequence iff they compare equal.
 */
class EpWord {
 public:
  /// Empty set: "" · "0"^ω.
  EpWord() : period_("0") {}
  /// Bits are '0'/'1' characters; the period must be non-empty.
  EpWord(std::string preperiod, std::string period);

  static EpWord zeros() { return EpWord(); }
  static EpWord ones() { return EpWord("", "1"); }
  /// Finite set given by its characteristic prefix.
  static EpWord finite(std::string bits) { return EpWord(std::move(bits), "0"); }

  const std::string& preperiod() const { return preperiod_; }
  const std::string& period() const { return period_; }

  bool bit(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i] == '1';
    return period_[(i - preperiod_.size()) % period_.size()] == '1';
  }

  /// Infinitely many members, i.e. the period contains a 1.
  bool is_infinite() const { return period_.find('1') != std::string::npos; }
  /// Infinitely many non-members, i.e. the period contains a 0.
  bool is_coinfinite() const { return period_.find('0') != std::string::npos; }

  EpWord complement() const;

  auto operator<=>(const EpWord&) const = default;

 private:
  std::string preperiod_;
  std::string period_;
};

/// Subset of a countable set carrying the cofinite topology.
struct CofiniteSet {
  EpWord word;
};

/// Monitorable iff not both infinite and coinfinite.
bool cofinite_is_monitorable(const CofiniteSet& a);

/**
 * Subset of the grid ℕ×ℕ ordered columnwise ((m,n) below (m,n') for n ≤ n'),
 * with the Alexandrov topology: basic opens are the column tails. Presented
 * by one word per column: a default word plus finitely many exceptions.
 */
struct GridSet {
  EpWord default_column;
  std::map<std::uint32_t, EpWord> exceptional_columns;

  const EpWord& column(std::uint32_t m) const {
    auto it = exceptional_columns.find(m);
    return it == exceptional_columns.end() ? default_column : it->second;
  }
  bool member(std::uint32_t m, std::size_t n) const { return column(m).bit(n); }

  auto operator<=>(const GridSet&) const = default;
};

struct GridVerdict {
  bool monitorable = true;
  /// A column in which the set is both dense and codense, present iff not
  /// monitorable. Smallest mixed exceptional index, else the smallest
  /// non-exceptional index.
  std::optional<std::uint32_t> witness_column;
};

/// A column tail sees the set dense iff the column is infinite and codense
/// iff it is coinfinite, so the set is monitorable iff no column word has a
/// mixed period.
GridVerdict grid_is_monitorable(const GridSet& a);

using Sequence = std::vector<std::uint32_t>;

/// One-line rendering: dot-separated, "eps" for the empty sequence.
std::string sequence_to_string(const Sequence& s);

/**
 * Subset of ℕ^<ω ∪ {∞} with the Scott topology (non-empty opens are up-sets
 * meeting every infinite branch; all of them contain ∞). Presented as a
 * finite union of parts:
 *   - explicit_nodes: individual sequences;
 *   - cone_roots: u contributes every extension of u, u included;
 *   - spines: (u, k) contributes { u·k^j | j ≥ 0 }.
 * The class is closed under the reductions that target it, not under
 * complement; equality is structural.
 */
struct ScottSet {
  bool infinity_member = false;
  std::set<Sequence> explicit_nodes;
  std::set<Sequence> cone_roots;
  std::set<std::pair<Sequence, std::uint32_t>> spines;

  auto operator<=>(const ScottSet&) const = default;
};

/// Int(A) ≠ ∅: exactly when ∞ ∈ A and the full cone at the root is inside A.
/// With finitely many parts, a whole cone fits inside A only below a cone
/// root, and finitely many non-root cones leave some branch uncovered.
bool scott_interior_nonempty(const ScottSet& a);

/// Int(X \ A) ≠ ∅: a branch through a cone root or along a spine never
/// escapes Cl(A), so this needs ∞ ∉ A and no cones or spines; the finite
/// explicit part is then avoided past its depth.
bool scott_complement_interior_nonempty(const ScottSet& a);

/// Every non-empty open set meets A.
bool scott_is_dense(const ScottSet& a);

/// The space is hyperconnected, so A is monitorable iff Int(A) ≠ ∅ or
/// Int(X \ A) ≠ ∅.
bool scott_is_monitorable(const ScottSet& a);

/// Subset of the sum of a k-point discrete block Y and a 2-point indiscrete
/// block {z1, z2}. The discrete part is kept finite; the verdict only
/// depends on the z-bits.
struct SumSet {
  std::size_t y_size = 0;
  std::set<std::size_t> discrete_part;
  bool z1 = false;
  bool z2 = false;
};

/// Monitorable iff z1 and z2 agree (the indiscrete block is not split).
bool sum_is_monitorable(const SumSet& a);

}  // namespace topomon
