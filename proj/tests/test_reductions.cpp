#include <doctest.h>

#include <set>

#include "topomon/reductions.hpp"

using namespace topomon;

TEST_CASE("membership in S3 from the column words") {
  GridAlpha all_ones;
  all_ones.default_column = EpWord::ones();
  CHECK(!in_s3(all_ones));

  GridAlpha one_zero_column = all_ones;
  one_zero_column.exceptional_columns.emplace(2, EpWord::zeros());
  CHECK(in_s3(one_zero_column));

  GridAlpha all_zeros;
  CHECK(in_s3(all_zeros));

  GridAlpha finite_zeros;  // zeros only in the preperiod: not infinitely many
  finite_zeros.default_column = EpWord("0010", "1");
  CHECK(!in_s3(finite_zeros));
}

TEST_CASE("grid reduction on the pinned words") {
  GridAlpha all_ones;
  all_ones.default_column = EpWord::ones();
  const GridSet empty_image = grid_reduction(all_ones);
  CHECK(empty_image.default_column == EpWord::zeros());
  CHECK(empty_image.exceptional_columns.empty());

  GridAlpha zero_column;
  zero_column.default_column = EpWord::ones();
  zero_column.exceptional_columns.emplace(2, EpWord::zeros());
  const GridSet evens_image = grid_reduction(zero_column);
  CHECK(evens_image.column(2) == EpWord("", "10"));

  GridAlpha alternating;
  alternating.default_column = EpWord("", "10");
  CHECK(grid_reduction(alternating).default_column == EpWord("", "0010"));
}

TEST_CASE("grid reduction bit level: image holds (m,2n) iff alpha clears (m,n)") {
  SplitMix64 g(123);
  for (int trial = 0; trial < 200; ++trial) {
    const GridAlpha alpha = random_grid_alpha(g);
    const GridSet image = grid_reduction(alpha);
    for (std::uint32_t m = 0; m < 12; ++m)
      for (std::size_t n = 0; n < 24; ++n) {
        CHECK(image.member(m, 2 * n) == !alpha.member(m, n));
        CHECK(!image.member(m, 2 * n + 1));
      }
  }
}

TEST_CASE("the image is always codense: every image column is coinfinite") {
  SplitMix64 g(9);
  for (int trial = 0; trial < 300; ++trial) {
    const GridSet image = grid_reduction(random_grid_alpha(g));
    CHECK(image.default_column.is_coinfinite());
    for (const auto& [m, w] : image.exceptional_columns) CHECK(w.is_coinfinite());
  }
}

TEST_CASE("grid certification on the pinned inputs and a seeded sweep") {
  GridAlpha all_ones;
  all_ones.default_column = EpWord::ones();
  CHECK(certify_grid_reduction(all_ones));

  GridAlpha zero_column = all_ones;
  zero_column.exceptional_columns.emplace(1, EpWord::zeros());
  CHECK(certify_grid_reduction(zero_column));

  const CertificationReport r = certify_grid_sweep(500, 7);
  CHECK(r.cases == 500);
  CHECK(r.all_passed());
}

TEST_CASE("tree presentations: validation") {
  TreePresentation not_closed;
  not_closed.explicit_nodes.insert(Sequence{0, 1});
  CHECK_THROWS_AS(validate_tree(not_closed), std::invalid_argument);

  TreePresentation dangling_spine;
  dangling_spine.explicit_nodes.insert(Sequence{});
  dangling_spine.spine = std::make_pair(Sequence{3}, 0u);
  CHECK_THROWS_AS(validate_tree(dangling_spine), std::invalid_argument);

  TreePresentation ok;
  ok.explicit_nodes.insert(Sequence{});
  ok.explicit_nodes.insert(Sequence{3});
  ok.spine = std::make_pair(Sequence{3}, 0u);
  CHECK_NOTHROW(validate_tree(ok));
}

TEST_CASE("tree reduction on the pinned trees") {
  const TreePresentation empty_tree;
  CHECK(is_well_founded(empty_tree));
  CHECK(tree_reduction(empty_tree) == ScottSet{});
  CHECK(scott_is_monitorable(tree_reduction(empty_tree)));

  TreePresentation branching;
  branching.explicit_nodes = {Sequence{}, Sequence{0}, Sequence{1}};
  CHECK(is_well_founded(branching));
  CHECK(scott_is_monitorable(tree_reduction(branching)));

  TreePresentation spined;
  spined.explicit_nodes = {Sequence{}};
  spined.spine = std::make_pair(Sequence{}, 0u);
  CHECK(!is_well_founded(spined));
  const ScottSet image = tree_reduction(spined);
  CHECK(!image.infinity_member);
  CHECK(image.cone_roots.empty());
  CHECK(image.spines.size() == 1);
  CHECK(!scott_is_monitorable(image));
}

TEST_CASE("exhaustive tree certification to depth 3") {
  const CertificationReport r = certify_tree_sweep(3);
  CHECK(r.all_passed());
  // 677 prefix-closed {0,1}-trees of depth <= 3, each also with a spine at
  // every node with both labels
  CHECK(r.cases == 12949);
}

TEST_CASE("tree reduction is injective on distinct presentations") {
  // a small distinct family: prefix-closed subsets of {0,1,ε,00,11}
  std::vector<TreePresentation> family;
  std::vector<std::set<Sequence>> trees = {{}};
  for (unsigned mask = 0; mask < 16u; ++mask) {
    if ((mask & 4u) && !(mask & 1u)) continue;  // 00 needs 0
    if ((mask & 8u) && !(mask & 2u)) continue;  // 11 needs 1
    std::set<Sequence> t = {Sequence{}};
    if (mask & 1u) t.insert(Sequence{0});
    if (mask & 2u) t.insert(Sequence{1});
    if (mask & 4u) t.insert(Sequence{0, 0});
    if (mask & 8u) t.insert(Sequence{1, 1});
    trees.push_back(std::move(t));
  }
  for (const auto& nodes : trees) {
    family.push_back(TreePresentation{nodes, std::nullopt});
    for (const Sequence& u : nodes)
      for (std::uint32_t label : {0u, 1u})
        family.push_back(TreePresentation{nodes, std::make_pair(u, label)});
  }

  std::set<ScottSet> images;
  for (const TreePresentation& t : family) images.insert(tree_reduction(t));
  CHECK(images.size() == family.size());
}
