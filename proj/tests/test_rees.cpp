#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "csext/catalog.hpp"
#include "csext/rees.hpp"

using namespace csext;

namespace {

  ReesMatrixSemigroup random_rms(FiniteGroup const& g,
                                 std::size_t        m,
                                 std::size_t        k,
                                 std::mt19937&      rng) {
    std::uniform_int_distribution<element_id> pick(
        0, static_cast<element_id>(g.order() - 1));
    std::vector<std::vector<element_id>> p(k, std::vector<element_id>(m));
    for (auto& row : p) {
      for (auto& x : row) {
        x = pick(rng);
      }
    }
    return ReesMatrixSemigroup(g, m, k, std::move(p));
  }

}  // namespace

TEST_CASE("construction and encoding", "[rees]") {
  auto s = ReesMatrixSemigroup(cyclic_group(4), 2, 3, {{0, 0}, {0, 1}, {0, 2}});
  CHECK(s.size() == 24);
  CHECK(s.normalized());
  for (element_id x = 0; x < s.size(); ++x) {
    REQUIRE(s.encode(s.decode(x)) == x);
  }
  CHECK_THROWS_AS(ReesMatrixSemigroup(cyclic_group(4), 2, 2, {{0, 0}}), Error);
  CHECK_THROWS_AS(ReesMatrixSemigroup(cyclic_group(4), 2, 2, {{0, 0}, {0, 4}}),
                  Error);
  CHECK_FALSE(
      ReesMatrixSemigroup(cyclic_group(4), 2, 2, {{1, 0}, {0, 0}}).normalized());
}

TEST_CASE("product follows the sandwich rule", "[rees]") {
  auto g = symmetric_group_3();
  auto s = ReesMatrixSemigroup(g, 2, 2, {{0, 0}, {0, 3}});
  // (0, 1, 1)(1, 2, 0) = (0, 1 * p[1][1] * 2, 0) = (0, 1 3 2, 0)
  auto r = rms_product({0, 1, 1}, {1, 2, 0}, s);
  CHECK(r.i == 0);
  CHECK(r.lambda == 0);
  CHECK(r.g == g.product(g.product(1, 3), 2));
}

TEST_CASE("Rees matrix semigroups are associative", "[rees][property]") {
  std::mt19937 rng(5);
  for (auto const& g : {cyclic_group(3), symmetric_group_3()}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto s = random_rms(g, 2, 3, rng).as_semigroup("rms");
      REQUIRE(s.size() <= 200);
      REQUIRE_FALSE(find_non_associative(s));
      REQUIRE(is_completely_simple(s));
    }
  }
}

TEST_CASE("normalization is an isomorphism", "[rees][property]") {
  std::mt19937 rng(17);
  for (auto const& g : {cyclic_group(4), symmetric_group_3(), order21_group()}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto s  = random_rms(g, 2 + trial % 2, 2, rng);
      auto nm = normalize_rms(s);
      REQUIRE(nm.normalized.normalized());
      auto check = is_semigroup_morphism(nm.iso,
                                         s.as_semigroup("S"),
                                         nm.normalized.as_semigroup("T"));
      REQUIRE(check.morphism);
      REQUIRE(check.injective);
    }
  }
}

TEST_CASE("centrality", "[rees]") {
  auto s3 = symmetric_group_3();
  CHECK(is_central_rms(ReesMatrixSemigroup(cyclic_group(4), 2, 2, {{0, 0}, {0, 2}})));
  CHECK_FALSE(is_central_rms(ReesMatrixSemigroup(s3, 2, 2, {{0, 0}, {0, 1}})));
  CHECK_FALSE(is_central_rms(
      ReesMatrixSemigroup(order21_group(), 2, 2, {{0, 0}, {0, 1}})));
  CHECK(is_central_rms(ReesMatrixSemigroup(s3, 2, 2, {{0, 0}, {0, 0}})));
  CHECK_THROWS_AS(
      is_central_rms(ReesMatrixSemigroup(s3, 2, 2, {{1, 0}, {0, 0}})), Error);
}

TEST_CASE("group congruences from normal subgroups", "[rees]") {
  auto g = order21_group();
  auto s = ReesMatrixSemigroup(g, 2, 2, {{0, 0}, {0, 1}});
  auto n = subgroup_generated(g, {1});

  auto rho = congruence_from_normal(s, n);
  CHECK(rho.quotient.quotient.order() == 3);
  CHECK(rho.kernel_members.size() == 28);
  CHECK(kernel_rms(rho).rms.size() == 28);

  // normal subgroups containing p22: N and G
  auto all = enumerate_group_congruences(s);
  REQUIRE(all.size() == 2);
  CHECK(all[0].normal_sub.size() == 7);
  CHECK(all[1].normal_sub.size() == 21);
  CHECK(all[1].quotient.quotient.order() == 1);

  // Z4 with an entry 1: only Z4 itself contains it
  auto z4 = ReesMatrixSemigroup(cyclic_group(4), 2, 2, {{0, 0}, {0, 1}});
  CHECK(enumerate_group_congruences(z4).size() == 1);

  // all-identity sandwich over Z2: both subgroups qualify
  auto z2 = ReesMatrixSemigroup(cyclic_group(2), 2, 2, {{0, 0}, {0, 0}});
  CHECK(enumerate_group_congruences(z2).size() == 2);

  auto s3 = symmetric_group_3();
  auto bad = ReesMatrixSemigroup(s3, 2, 2, {{0, 0}, {0, 3}});
  try {
    congruence_from_normal(bad, subgroup_from_members(s3, {0, 1, 2}));
    FAIL("expected EntryOutsideN");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::EntryOutsideN);
  }
  try {
    congruence_from_normal(bad, subgroup_from_members(s3, {0, 3}));
    FAIL("expected NotNormal");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
}

TEST_CASE("congruence laws hold for every qualifying subgroup",
          "[rees][property]") {
  std::mt19937 rng(3);
  for (auto const& g : {cyclic_group(6), symmetric_group_3(), order21_group()}) {
    for (auto const& n : all_subgroups(g)) {
      if (!n.normal) {
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, n.size() - 1);
      std::vector<std::vector<element_id>> p{{0, 0, 0}, {0, 0, 0}};
      p[1][1] = n.members[pick(rng)];
      p[1][2] = n.members[pick(rng)];
      auto s   = ReesMatrixSemigroup(g, 3, 2, p);
      auto rho = congruence_from_normal(s, n);
      // kernel is the preimage of the identity coset
      for (element_id x = 0; x < s.size(); ++x) {
        bool in_kernel = std::binary_search(
            rho.kernel_members.begin(), rho.kernel_members.end(), x);
        REQUIRE(in_kernel == n.contains(s.decode(x).g));
      }
      auto k = kernel_rms(rho);
      for (element_id a = 0; a < k.rms.size(); ++a) {
        for (element_id b = 0; b < k.rms.size(); ++b) {
          REQUIRE(k.inclusion[k.rms.product(a, b)]
                  == s.product(k.inclusion[a], k.inclusion[b]));
        }
      }
    }
  }
}
