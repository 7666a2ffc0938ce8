// csext - extensions of completely simple semigroups by groups
//
// Built-in groups and (G, N) pairs used by the default verification suites.

#ifndef CSEXT_CATALOG_HPP_
#define CSEXT_CATALOG_HPP_

#include <string>
#include <vector>

#include "counterexample.hpp"
#include "group.hpp"

namespace csext {

  // S3 as permutations of {0, 1, 2}, ordered so that {0, 1, 2} is A3:
  // 0 = id, 1 = (012), 2 = (021), 3 = (12), 4 = (02), 5 = (01).
  inline FiniteGroup symmetric_group_3() {
    static constexpr int perm[6][3]
        = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto index = [](int const* p) {
      for (element_id k = 0; k < 6; ++k) {
        if (perm[k][0] == p[0] && perm[k][1] == p[1] && perm[k][2] == p[2]) {
          return k;
        }
      }
      return element_id(6);
    };
    // (ab)(x) = a(b(x))
    return FiniteGroup::from_product(6, [&](element_id a, element_id b) {
      int p[3];
      for (int x = 0; x < 3; ++x) {
        p[x] = perm[a][perm[b][x]];
      }
      return index(p);
    });
  }

  struct NamedPair {
    std::string name;
    FiniteGroup g;
    Subgroup    n;
  };

  inline std::vector<NamedPair> kk_catalog() {
    std::vector<NamedPair> out;
    auto add = [&](std::string name, FiniteGroup g, std::vector<element_id> n) {
      Subgroup sub = subgroup_from_members(g, std::move(n));
      out.push_back(NamedPair{std::move(name), std::move(g), std::move(sub)});
    };
    add("z4", cyclic_group(4), {0, 2});
    add("z6", cyclic_group(6), {0, 3});
    add("s3", symmetric_group_3(), {0, 1, 2});
    FiniteGroup g21 = order21_group();
    add("order21", g21, subgroup_generated(g21, {order21_encode(1, 1)}).members);
    return out;
  }

}  // namespace csext

#endif  // CSEXT_CATALOG_HPP_
