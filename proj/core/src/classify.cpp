#include "topomon/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace topomon {

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::AllSets: return "AllSets";
    case ClassTag::Sigma02Branch: return "Sigma02Branch";
    case ClassTag::Pi03Complete: return "Pi03Complete";
    case ClassTag::Pi11Complete: return "Pi11Complete";
    case ClassTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Refinement r) {
  switch (r) {
    case Refinement::Clopen: return "Clopen";
    case Refinement::Closed: return "Closed";
    case Refinement::Sigma02Complete: return "Sigma02Complete";
  }
  return "";
}

ComplexityVerdict classify(const SpacePresentation& p, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("classify: budget must be at least 1");

  ComplexityVerdict v;
  v.budget_used = budget;
  v.evidence.minimal_opens = p.minimal_opens_summary();
  v.evidence.note = p.note();

  if (p.isolated_points_dense()) {
    v.tag = ClassTag::AllSets;
    v.evidence.isolated_points_dense = true;
    return v;
  }

  if (!p.second_countable()) {
    v.tag = p.coanalytic_completeness_certificate() ? ClassTag::Pi11Complete : ClassTag::Unknown;
    return v;
  }

  DisjointFamilyReport report = p.disjoint_opens_in_l(budget);
  v.evidence.disjoint_bound = report.bound;
  v.evidence.disjoint_witnesses = report.witnesses;
  v.evidence.unbounded_family_certified = report.certified_unbounded;

  if (report.bound.has_value()) {
    v.tag = ClassTag::Sigma02Branch;
    v.refinement = p.exact_refinement();
  } else if (report.certified_unbounded && report.witnesses.size() >= budget) {
    v.tag = ClassTag::Pi03Complete;
  } else {
    v.tag = ClassTag::Unknown;
  }
  return v;
}

namespace {

std::string describe_set(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) {
    if (!first) out += ' ';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

class FinitePresentation final : public SpacePresentation {
 public:
  explicit FinitePresentation(FiniteSpace s) : space_(std::move(s)), hl_(compute_h_l(space_)) {}

  bool isolated_points_dense() const override {
    return space_.closure(space_.isolated_points()) == space_.full_set();
  }

  bool second_countable() const override { return true; }

  std::string minimal_opens_summary() const override {
    const auto mins = minimal_opens(space_);
    return std::to_string(mins.size()) + " minimal non-empty open set(s); H covers " +
           std::to_string(hl_.h.count()) + "/" + std::to_string(space_.size()) +
           " points; L has " + std::to_string(hl_.l.count()) + " point(s)";
  }

  DisjointFamilyReport disjoint_opens_in_l(std::size_t) const override {
    // A disjoint family of opens inside L refines to minimal neighbourhoods
    // of points of L, and the inclusion-minimal ones among those are pairwise
    // disjoint, so they realize the maximum.
    std::set<PointSet> candidates;
    for (auto x = hl_.l.find_first(); x != PointSet::npos; x = hl_.l.find_next(x))
      candidates.insert(space_.minopen(x));
    DisjointFamilyReport report;
    std::size_t count = 0;
    for (const PointSet& u : candidates) {
      bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const PointSet& v) {
        return v != u && v.is_subset_of(u);
      });
      if (minimal) {
        ++count;
        report.witnesses.push_back(describe_set(u));
      }
    }
    report.bound = count;
    return report;
  }

  std::optional<Refinement> exact_refinement() const override {
    const std::size_t n = space_.size();
    if (n >= 2 && space_.minopen(0) == space_.full_set()) {
      bool indiscrete = true;
      for (std::size_t x = 1; x < n && indiscrete; ++x)
        indiscrete = (space_.minopen(x) == space_.full_set());
      if (indiscrete) return Refinement::Closed;
    }
    // Disjoint sum of minimal opens with a non-trivial block: membership of a
    // set in the monitorable family depends on finitely many "block not
    // split" constraints.
    if (hl_.h == space_.full_set()) {
      for (const PointSet& u : minimal_opens(space_))
        if (u.count() >= 2) return Refinement::Clopen;
    }
    return std::nullopt;
  }

  std::string note() const override {
    return "finite space: the monitorable family is itself finite, so the verdict reports the "
           "structure of the classification procedure rather than a pointclass membership";
  }

 private:
  FiniteSpace space_;
  HLSplit hl_;
};

class CofinitePresentation final : public SpacePresentation {
 public:
  bool isolated_points_dense() const override { return false; }
  bool second_countable() const override { return true; }
  std::string minimal_opens_summary() const override {
    return "no minimal non-empty open sets (every open set is cofinite); H is empty, L is the "
           "whole space";
  }
  DisjointFamilyReport disjoint_opens_in_l(std::size_t) const override {
    DisjointFamilyReport report;
    report.bound = 1;
    report.witnesses.push_back("any non-empty open set; two cofinite sets always intersect");
    return report;
  }
  std::optional<Refinement> exact_refinement() const override {
    return Refinement::Sigma02Complete;
  }
  std::string note() const override {
    return "hyperconnected: any two non-empty open sets intersect";
  }
};

class GridPresentation final : public SpacePresentation {
 public:
  bool isolated_points_dense() const override { return false; }
  bool second_countable() const override { return true; }
  std::string minimal_opens_summary() const override {
    return "no minimal non-empty open sets (column tails descend forever); H is empty, L is the "
           "whole grid";
  }
  DisjointFamilyReport disjoint_opens_in_l(std::size_t max_witnesses) const override {
    DisjointFamilyReport report;
    report.certified_unbounded = true;
    for (std::size_t m = 0; m < max_witnesses; ++m)
      report.witnesses.push_back("column " + std::to_string(m) + " tail {(" + std::to_string(m) +
                                 ",n) | n >= 0}");
    return report;
  }
  std::string note() const override {
    return "distinct column tails are pairwise disjoint open sets, one per column";
  }
};

class ScottPresentation final : public SpacePresentation {
 public:
  bool isolated_points_dense() const override { return false; }
  bool second_countable() const override { return false; }
  std::string minimal_opens_summary() const override {
    return "no minimal non-empty open sets; every non-empty open set contains the top point";
  }
  DisjointFamilyReport disjoint_opens_in_l(std::size_t) const override {
    DisjointFamilyReport report;
    report.bound = 1;  // hyperconnected through the top point
    return report;
  }
  bool coanalytic_completeness_certificate() const override { return true; }
  std::string note() const override {
    return "not second countable: well-founded trees reduce to the monitorable family";
  }
};

}  // namespace

std::unique_ptr<SpacePresentation> finite_presentation(FiniteSpace s) {
  if (auto violation = s.validate())
    throw std::invalid_argument("finite_presentation: " + violation->describe());
  return std::make_unique<FinitePresentation>(std::move(s));
}

std::unique_ptr<SpacePresentation> builtin_presentation(const std::string& name) {
  auto parse_arg = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
        name[prefix.size()] != '(' || name.back() != ')')
      return std::nullopt;
    const std::string digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    return static_cast<std::size_t>(std::stoul(digits));
  };

  if (name == "cofinite") return std::make_unique<CofinitePresentation>();
  if (name == "grid") return std::make_unique<GridPresentation>();
  if (name == "scott") return std::make_unique<ScottPresentation>();
  if (auto n = parse_arg("discrete")) return finite_presentation(FiniteSpace::discrete(*n));
  if (auto n = parse_arg("indiscrete")) return finite_presentation(FiniteSpace::indiscrete(*n));
  if (auto k = parse_arg("sum")) return finite_presentation(FiniteSpace::discrete_plus_indiscrete(*k));
  throw std::invalid_argument("unknown built-in space '" + name +
                              "'; expected discrete(n), indiscrete(n), sum(k), cofinite, grid or "
                              "scott");
}

}  // namespace topomon
