#include <algorithm>
#include <map>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "csext/catalog.hpp"
#include "csext/group.hpp"

using namespace csext;

namespace {

  template <typename Fn>
  ErrorCode code_of(Fn&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::ParseError;
  }

  // (a, k)(b, m) = (a + k b, k m) computed without the library.
  int raw21(int x, int y) {
    int const ks[3] = {1, 2, 4};
    int       a = x % 7, k = ks[x / 7], b = y % 7, m = ks[y / 7];
    int       km = (k * m) % 7;
    return (a + k * b) % 7 + 7 * int(std::find(ks, ks + 3, km) - ks);
  }

  std::vector<FiniteGroup> sample_groups() {
    return {cyclic_group(1),
            cyclic_group(4),
            cyclic_group(6),
            symmetric_group_3(),
            order21_group(),
            direct_power_group(cyclic_group(2), 3)};
  }

}  // namespace

TEST_CASE("table validation", "[group]") {
  CHECK(make_group_from_table({{0}}).order() == 1);
  auto z2 = make_group_from_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inverse(1) == 1);

  CHECK(code_of([] { make_group_from_table({{0, 1}, {1}}); })
        == ErrorCode::NotSquare);
  CHECK(code_of([] { make_group_from_table({{0, 1}, {1, 2}}); })
        == ErrorCode::OutOfRange);
  CHECK(code_of([] { make_group_from_table({{1, 0}, {0, 1}}); })
        == ErrorCode::NoIdentityAtZero);
  CHECK(code_of([] { make_group_from_table({{0, 1}, {1, 1}}); })
        == ErrorCode::MissingInverse);
  CHECK(code_of([] { make_group_from_table({}); }) == ErrorCode::ZeroOrder);
  // smallest non-associative loop
  CHECK(code_of([] {
          make_group_from_table({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}});
        })
        == ErrorCode::NotAssociative);
}

TEST_CASE("Light's test catches a large non-associative table", "[group]") {
  // Z_250 with one product swapped is still a Latin square with identity
  // but no longer associative; 250^3 > 10^7 forces the generator test.
  std::size_t const       n = 250;
  std::vector<element_id> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a * n + b] = static_cast<element_id>((a + b) % n);
    }
  }
  CHECK_NOTHROW(FiniteGroup::from_flat_table(n, t));
  std::swap(t[3 * n + 5], t[3 * n + 6]);
  std::swap(t[4 * n + 5], t[4 * n + 6]);
  CHECK(code_of([&] { FiniteGroup::from_flat_table(n, t); })
        == ErrorCode::NotAssociative);
}

TEST_CASE("cyclic groups", "[group]") {
  CHECK(cyclic_group(1).order() == 1);
  auto z7 = cyclic_group(7);
  CHECK(centre_and_orders(z7).order_of[1] == 7);
  CHECK(z7.power(3, 7) == 0);
  CHECK(code_of([] { cyclic_group(0); }) == ErrorCode::ZeroOrder);
}

TEST_CASE("order-21 group matches its defining formula", "[group]") {
  auto g = order21_group();
  for (element_id x = 0; x < 21; ++x) {
    for (element_id y = 0; y < 21; ++y) {
      REQUIRE(g.product(x, y) == static_cast<element_id>(raw21(x, y)));
    }
  }
  // (0,2)(1,1)(0,4) = (2,1)
  CHECK(g.product(g.product(order21_encode(0, 2), order21_encode(1, 1)),
                  order21_encode(0, 4))
        == order21_encode(2, 1));
}

TEST_CASE("subgroups and normality", "[group]") {
  auto g = order21_group();
  auto n = subgroup_generated(g, {order21_encode(1, 1)});
  CHECK(n.members == std::vector<element_id>{0, 1, 2, 3, 4, 5, 6});
  CHECK(n.normal);

  auto s3 = symmetric_group_3();
  CHECK(subgroup_from_members(s3, {0, 1, 2}).normal);
  CHECK_FALSE(subgroup_from_members(s3, {0, 3}).normal);
  CHECK(code_of([&] { subgroup_from_members(s3, {0, 3, 4}); })
        == ErrorCode::NotGenerating);
  CHECK(code_of([&] {
          quotient_with_transversal(s3, subgroup_from_members(s3, {0, 3}));
        })
        == ErrorCode::NotNormal);

  // trivial, seven of order 3, N, G
  CHECK(all_subgroups(g).size() == 10);
  CHECK(all_subgroups(s3).size() == 6);
  CHECK(all_subgroups(cyclic_group(6)).size() == 4);
  CHECK(all_subgroups(direct_power_group(cyclic_group(2), 3)).size() == 16);
}

TEST_CASE("quotient with minimum transversal", "[group]") {
  auto z4 = cyclic_group(4);
  auto q  = quotient_with_transversal(z4, subgroup_generated(z4, {2}));
  CHECK(q.quotient.order() == 2);
  CHECK(q.coset_of == std::vector<element_id>{0, 1, 0, 1});
  CHECK(q.transversal == std::vector<element_id>{0, 1});
}

TEST_CASE("quotients are morphisms with least representatives",
          "[group][property]") {
  for (auto const& g : sample_groups()) {
    for (auto const& n : all_subgroups(g)) {
      if (!n.normal) {
        continue;
      }
      auto q = quotient_with_transversal(g, n);
      REQUIRE(q.quotient.order() * n.size() == g.order());
      REQUIRE(q.transversal[0] == 0);
      for (element_id x = 0; x < g.order(); ++x) {
        REQUIRE(q.transversal[q.coset_of[x]] <= x);
        REQUIRE(n.contains(g.product(g.inverse(q.transversal[q.coset_of[x]]), x)));
        for (element_id y = 0; y < g.order(); ++y) {
          REQUIRE(q.coset_of[g.product(x, y)]
                  == q.quotient.product(q.coset_of[x], q.coset_of[y]));
        }
      }
    }
  }
}

TEST_CASE("centre and element orders", "[group]") {
  auto g  = order21_group();
  auto co = centre_and_orders(g);
  CHECK(co.centre == std::vector<element_id>{0});

  // oracle: raw powers and raw commutation
  std::map<int, int> hist;
  for (int x = 0; x < 21; ++x) {
    int k = 1, y = x;
    while (y != 0) {
      y = raw21(y, x);
      ++k;
    }
    ++hist[k];
    REQUIRE(co.order_of[x] == static_cast<std::size_t>(k));
  }
  CHECK(hist[1] == 1);
  CHECK(hist[3] == 14);
  CHECK(hist[7] == 6);

  auto s3 = centre_and_orders(symmetric_group_3());
  CHECK(s3.centre == std::vector<element_id>{0});
  CHECK(centre_and_orders(cyclic_group(6)).centre.size() == 6);
}

TEST_CASE("words and presentations", "[group]") {
  CHECK(code_of([] { parse_word("xz", "xy"); }) == ErrorCode::BadWord);
  auto w = parse_word("yxYXX", "xy");
  REQUIRE(w.size() == 5);
  CHECK(w[2].inverse);

  auto g = order21_group();
  std::vector<element_id> gens{order21_encode(1, 1), order21_encode(0, 2)};
  for (char const* r : {"xxxxxxx", "yyy", "yxYXX"}) {
    CHECK(evaluate_word(g, parse_word(r, "xy"), gens) == 0);
  }
  CHECK(subgroup_generated(g, gens).size() == 21);
}

TEST_CASE("morphism enumeration", "[group]") {
  auto z4 = cyclic_group(4);
  auto rel = std::vector<Word>{parse_word("xxxx", "x")};
  // x -> any element: 4 endomorphisms, 2 automorphisms
  CHECK(enumerate_group_morphisms(z4, {1}, rel, z4, false, 4).size() == 4);
  CHECK(enumerate_group_morphisms(z4, {1}, rel, z4, true, 4).size() == 2);

  // S3 -> S3: 6 automorphisms, 3 maps onto order 2 images... counted by
  // brute force over generator images.
  auto s3   = symmetric_group_3();
  auto rels = std::vector<Word>{parse_word("xxx", "xy"),
                                parse_word("yy", "xy"),
                                parse_word("yxyx", "xy")};
  std::vector<element_id> gens{1, 3};
  std::size_t brute = 0, brute_inj = 0;
  for (element_id a = 0; a < 6; ++a) {
    for (element_id b = 0; b < 6; ++b) {
      std::vector<element_id> img{a, b};
      bool ok = true;
      for (auto const& r : rels) {
        ok = ok && evaluate_word(s3, r, img) == 0;
      }
      if (ok) {
        ++brute;
        brute_inj += subgroup_generated(s3, img).size() == 6 ? 1 : 0;
      }
    }
  }
  auto all = enumerate_group_morphisms(s3, gens, rels, s3, false, 6);
  CHECK(all.size() == brute);
  CHECK(enumerate_group_morphisms(s3, gens, rels, s3, true, 6).size()
        == brute_inj);
  CHECK(brute_inj == 6);
  for (auto const& m : all) {
    REQUIRE(is_group_morphism(s3, s3, m.image));
  }
}

TEST_CASE("morphism enumeration is independent of jobs", "[group]") {
  auto g    = order21_group();
  auto rels = std::vector<Word>{parse_word("xxxxxxx", "xy"),
                                parse_word("yyy", "xy"),
                                parse_word("yxYXX", "xy")};
  std::vector<element_id> gens{order21_encode(1, 1), order21_encode(0, 2)};
  auto a = enumerate_group_morphisms(g, gens, rels, g, false, 21, 1);
  auto b = enumerate_group_morphisms(g, gens, rels, g, false, 21, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    REQUIRE(a[k].image == b[k].image);
  }
  // automorphisms of the order-21 group: 42
  CHECK(enumerate_group_morphisms(g, gens, rels, g, true, 21).size() == 42);
}

TEST_CASE("isomorphism test", "[group]") {
  auto z2 = cyclic_group(2);
  CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_power_group(z2, 2)));
  CHECK(are_isomorphic(cyclic_group(6),
                       FiniteGroup::from_product(6, [](element_id a, element_id b) {
                         // Z2 x Z3 as (a % 2, a / 2)
                         return ((a % 2 + b % 2) % 2) + 2 * ((a / 2 + b / 2) % 3);
                       })));
  CHECK_FALSE(are_isomorphic(cyclic_group(6), symmetric_group_3()));
  CHECK(code_of([] { are_isomorphic(cyclic_group(25), cyclic_group(25)); })
        == ErrorCode::SizeOverflow);
}
