#include "topomon/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace topomon {

bool in_s3(const GridAlpha& alpha) {
  for (const auto& [m, w] : alpha.exceptional_columns)
    if (w.is_coinfinite()) return true;
  // A zero-rich default word covers infinitely many columns, any one works.
  return alpha.default_column.is_coinfinite();
}

namespace {

std::string complement_and_interleave(const std::string& bits) {
  std::string out;
  out.reserve(bits.size() * 2);
  for (char c : bits) {
    out += (c == '0') ? '1' : '0';
    out += '0';
  }
  return out;
}

EpWord reduce_word(const EpWord& w) {
  return EpWord(complement_and_interleave(w.preperiod()), complement_and_interleave(w.period()));
}

}  // namespace

GridSet grid_reduction(const GridAlpha& alpha) {
  GridSet image;
  image.default_column = reduce_word(alpha.default_column);
  for (const auto& [m, w] : alpha.exceptional_columns) image.exceptional_columns.emplace(m, reduce_word(w));
  return image;
}

bool certify_grid_reduction(const GridAlpha& alpha) {
  return in_s3(alpha) == !grid_is_monitorable(grid_reduction(alpha)).monitorable;
}

void validate_tree(const TreePresentation& t) {
  for (const Sequence& node : t.explicit_nodes) {
    if (node.empty()) continue;
    Sequence parent(node.begin(), node.end() - 1);
    if (!t.explicit_nodes.count(parent))
      throw std::invalid_argument("tree is not prefix-closed at node " +
                                  sequence_to_string(node));
  }
  if (t.spine && !t.explicit_nodes.count(t.spine->first))
    throw std::invalid_argument("spine base " + sequence_to_string(t.spine->first) +
                                " is not an explicit node");
}

bool is_well_founded(const TreePresentation& t) {
  validate_tree(t);
  return !t.spine.has_value();
}

ScottSet tree_reduction(const TreePresentation& t) {
  validate_tree(t);
  ScottSet image;
  image.explicit_nodes = t.explicit_nodes;
  if (t.spine) image.spines.insert(*t.spine);
  return image;
}

bool certify_tree_reduction(const TreePresentation& t) {
  return is_well_founded(t) == scott_is_monitorable(tree_reduction(t));
}

GridAlpha random_grid_alpha(SplitMix64& g) {
  auto random_bits = [&](std::size_t min_len, std::size_t max_len) {
    const std::size_t len = min_len + g.next_below(max_len - min_len + 1);
    std::string bits(len, '0');
    for (char& c : bits)
      if (g.next() & 1u) c = '1';
    return bits;
  };
  GridAlpha alpha;
  alpha.default_column = EpWord(random_bits(0, 4), random_bits(1, 4));
  const std::size_t exceptions = g.next_below(5);
  for (std::size_t i = 0; i < exceptions; ++i) {
    const auto column = static_cast<std::uint32_t>(g.next_below(10));
    alpha.exceptional_columns.insert_or_assign(column, EpWord(random_bits(0, 4), random_bits(1, 4)));
  }
  return alpha;
}

CertificationReport certify_grid_sweep(std::size_t cases, std::uint64_t seed) {
  CertificationReport report;
  report.cases = cases;
  for (std::size_t i = 0; i < cases; ++i) {
    SplitMix64 g(derive_stream_seed(seed, i));
    const GridAlpha alpha = random_grid_alpha(g);
    if (!certify_grid_reduction(alpha))
      report.failures.push_back("case " + std::to_string(i) + ": " + grid_to_dsl(alpha));
  }
  return report;
}

namespace {

/// All prefix-closed subsets of {0,1}^(≤ depth), the root included when
/// non-empty, built bottom-up from the two subtrees.
std::vector<std::set<Sequence>> binary_trees(std::size_t depth) {
  if (depth == 0) return {{}, {Sequence{}}};
  std::vector<std::set<Sequence>> shallower = binary_trees(depth - 1);
  std::vector<std::set<Sequence>> out = {{}};
  auto graft = [](const std::set<Sequence>& sub, std::uint32_t label,
                  std::set<Sequence>& into) {
    for (const Sequence& node : sub) {
      Sequence shifted;
      shifted.reserve(node.size() + 1);
      shifted.push_back(label);
      shifted.insert(shifted.end(), node.begin(), node.end());
      into.insert(std::move(shifted));
    }
  };
  for (const auto& left : shallower)
    for (const auto& right : shallower) {
      std::set<Sequence> tree = {Sequence{}};
      graft(left, 0, tree);
      graft(right, 1, tree);
      out.push_back(std::move(tree));
    }
  return out;
}

}  // namespace

CertificationReport certify_tree_sweep(std::size_t max_depth) {
  CertificationReport report;
  auto check = [&](const TreePresentation& t) {
    ++report.cases;
    if (!certify_tree_reduction(t)) {
      std::string what = "tree with " + std::to_string(t.explicit_nodes.size()) + " node(s)";
      if (t.spine)
        what += ", spine at " + sequence_to_string(t.spine->first) + " label " +
                std::to_string(t.spine->second);
      report.failures.push_back(what);
    }
  };
  for (const std::set<Sequence>& nodes : binary_trees(max_depth)) {
    check(TreePresentation{nodes, std::nullopt});
    for (const Sequence& node : nodes)
      for (std::uint32_t label : {0u, 1u})
        check(TreePresentation{nodes, std::make_pair(node, label)});
  }
  return report;
}

std::string grid_to_dsl(const GridSet& a) {
  std::string out = "grid default pre=" + a.default_column.preperiod() +
                    " per=" + a.default_column.period();
  for (const auto& [m, w] : a.exceptional_columns)
    out += "\ncol " + std::to_string(m) + " pre=" + w.preperiod() + " per=" + w.period();
  return out;
}

}  // namespace topomon
