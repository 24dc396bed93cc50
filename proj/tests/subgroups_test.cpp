#include "conjposet/subgroups.hpp"

#include <map>
#include <set>
#include <vector>

#include "conjposet/errors.hpp"
#include "conjposet/group_spec.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace conjposet {
namespace {

Element label(const GroupTable& g, const char* l) { return *g.find_label(l); }

Subgroup generated(const GroupTable& g, std::vector<Element> gens) {
  return closure(g, gens);
}

std::set<std::vector<Element>> as_set(const SubgroupLattice& lat) {
  std::set<std::vector<Element>> out;
  for (const auto& h : lat.subs()) out.insert(h.elems);
  return out;
}

TEST(ClosureTest, Examples) {
  const GroupTable s3 = build_group("S3");
  EXPECT_EQ(generated(s3, {label(s3, "(1,2)")}).order(), 2u);

  const GroupSpec m27 = parse_spec("M3^3");
  const GroupTable g = build_group(m27);
  EXPECT_EQ(generated(g, {word_index(m27, 3, 0), word_index(m27, 0, 1)}).order(),
            9u);

  const Subgroup trivial = closure(g, {});
  EXPECT_EQ(trivial.elems, std::vector<Element>{kIdentity});
}

TEST(EnumerateSubgroupsTest, Q8MatchesSubsetOracle) {
  const GroupTable q8 = build_group("Q8");
  const SubgroupLattice lat = enumerate_subgroups(q8);
  EXPECT_EQ(as_set(lat), testing::brute_force_subgroups(q8));
  std::vector<std::size_t> orders;
  for (const auto& h : lat.subs()) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 4, 4, 4, 8}));
}

TEST(EnumerateSubgroupsTest, S3MatchesSubsetOracle) {
  const GroupTable s3 = build_group("S3");
  const SubgroupLattice lat = enumerate_subgroups(s3);
  EXPECT_EQ(lat.size(), 6u);
  EXPECT_EQ(as_set(lat), testing::brute_force_subgroups(s3));
}

TEST(EnumerateSubgroupsTest, PrimeCyclicHasTwoSubgroups) {
  for (const char* spec : {"C2", "C3", "C5", "C7", "C13"}) {
    EXPECT_EQ(enumerate_subgroups(build_group(spec)).size(), 2u) << spec;
  }
}

TEST(EnumerateSubgroupsTest, KnownCounts) {
  EXPECT_EQ(enumerate_subgroups(build_group("S4")).size(), 30u);
  EXPECT_EQ(enumerate_subgroups(build_group("A5")).size(), 59u);
  EXPECT_EQ(enumerate_subgroups(build_group("D16")).size(), 19u);
  // Elementary abelian 2^5: Gaussian binomials sum to 374.
  EXPECT_EQ(enumerate_subgroups(build_group("C2xC2xC2xC2xC2")).size(), 374u);
}

TEST(EnumerateSubgroupsTest, LatticeShape) {
  const SubgroupLattice lat = enumerate_subgroups(build_group("D12"));
  EXPECT_EQ(lat.sub(lat.trivial_idx()).order(), 1u);
  EXPECT_EQ(lat.sub(lat.full_idx()).order(), 12u);
  for (std::size_t i = 1; i < lat.size(); ++i) {
    EXPECT_LT(lat.sub(i - 1), lat.sub(i));
  }
}

TEST(EnumerateSubgroupsTest, CapIsAnErrorNotATruncation) {
  EXPECT_THROW(enumerate_subgroups(build_group("C2xC2xC2xC2xC2"), {512, 100}),
               SubgroupCapExceeded);
}

TEST(ConjugateSubgroupTest, Examples) {
  const GroupTable s3 = build_group("S3");
  const Subgroup h = generated(s3, {label(s3, "(1,2)")});
  EXPECT_EQ(conjugate_subgroup(s3, h, kIdentity), h);
  EXPECT_EQ(conjugate_subgroup(s3, h, label(s3, "(1,2,3)")),
            generated(s3, {label(s3, "(2,3)")}));

  const Subgroup a3 = generated(s3, {label(s3, "(1,2,3)")});
  for (Element x = 0; x < s3.order(); ++x) {
    EXPECT_EQ(conjugate_subgroup(s3, a3, x), a3);
  }
}

TEST(NormalizerTest, Examples) {
  const GroupTable s3 = build_group("S3");
  const SubgroupLattice lat = enumerate_subgroups(s3);
  EXPECT_EQ(normalizer(s3, lat.sub(lat.full_idx())), lat.sub(lat.full_idx()));
  EXPECT_EQ(normalizer(s3, generated(s3, {label(s3, "(1,2,3)")})).order(), 6u);
  const Subgroup t = generated(s3, {label(s3, "(1,2)")});
  EXPECT_EQ(normalizer(s3, t), t);
}

TEST(ConjugacyClassesTest, S3ClassSizesByOrder) {
  const GroupTable s3 = build_group("S3");
  const SubgroupLattice lat = enumerate_subgroups(s3);
  const ConjClassPoset ccp = conjugacy_classes(s3, lat);
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t c = 0; c < ccp.size(); ++c) {
    sizes[lat.sub(ccp.rep[c]).order()] = ccp.classes[c].size();
  }
  EXPECT_EQ(ccp.size(), 4u);
  EXPECT_EQ(sizes, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 1}, {6, 1}}));
  EXPECT_EQ(ccp.bottom_idx, 0u);
  EXPECT_EQ(ccp.top_idx, 3u);
}

TEST(ConjugacyClassesTest, Q8ClassesAreSingletons) {
  const GroupTable q8 = build_group("Q8");
  const SubgroupLattice lat = enumerate_subgroups(q8);
  const ConjClassPoset ccp = conjugacy_classes(q8, lat);
  EXPECT_EQ(ccp.size(), 6u);
  for (const auto& c : ccp.classes) EXPECT_EQ(c.size(), 1u);
}

TEST(ConjugacyClassesTest, RepresentativeIsLexicographicallyLeast) {
  const GroupTable s4 = build_group("S4");
  const SubgroupLattice lat = enumerate_subgroups(s4);
  const ConjClassPoset ccp = conjugacy_classes(s4, lat);
  for (std::size_t c = 0; c < ccp.size(); ++c) {
    for (std::size_t j : ccp.classes[c]) {
      EXPECT_LE(lat.sub(ccp.rep[c]).elems, lat.sub(j).elems);
      EXPECT_EQ(lat.sub(j).order(), lat.sub(ccp.rep[c]).order());
    }
  }
}

TEST(ConjugacyClassesTest, AbelianClassesMatchSubgroups) {
  const GroupTable g = build_group("C2xC6");
  const SubgroupLattice lat = enumerate_subgroups(g);
  const ConjClassPoset ccp = conjugacy_classes(g, lat);
  ASSERT_EQ(ccp.size(), lat.size());
  EXPECT_EQ(ccp.leq, lat.subset());
}

}  // namespace
}  // namespace conjposet
