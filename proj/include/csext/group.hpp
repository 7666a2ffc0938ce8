// csext - extensions of completely simple semigroups by groups
//
// Finite groups given by full multiplication tables over the identifiers
// 0, ..., n - 1, with 0 the identity.  Subgroups, quotients with a fixed
// transversal, centres, element orders and morphism enumeration from a
// presentation.

#ifndef CSEXT_GROUP_HPP_
#define CSEXT_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "function_space.hpp"
#include "parallel.hpp"

namespace csext {

  class FiniteGroup {
   public:
    // The trivial group.
    FiniteGroup() : FiniteGroup(1, std::vector<element_id>{0}, false) {}

    // Validates a row-major table: identity at 0, inverses, associativity.
    // Associativity is checked on all triples when order^3 <= 10^7 and by
    // Light's test against a generating set otherwise.
    static FiniteGroup from_flat_table(std::size_t              order,
                                       std::vector<element_id> table) {
      return FiniteGroup(order, std::move(table), true);
    }

    template <typename Product>
    static FiniteGroup from_product(std::size_t order, Product&& product) {
      std::vector<element_id> table(order * order);
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          table[a * order + b] = static_cast<element_id>(
              product(static_cast<element_id>(a), static_cast<element_id>(b)));
        }
      }
      return from_flat_table(order, std::move(table));
    }

    std::size_t order() const noexcept {
      return _order;
    }

    element_id product(element_id a, element_id b) const noexcept {
      return (*_table)[a * _order + b];
    }

    element_id inverse(element_id a) const noexcept {
      return (*_inverse)[a];
    }

    element_id power(element_id a, std::size_t k) const noexcept {
      element_id result = 0;
      for (std::size_t j = 0; j < k; ++j) {
        result = product(result, a);
      }
      return result;
    }

    // g * x * g^-1
    element_id conjugate(element_id g, element_id x) const noexcept {
      return product(product(g, x), inverse(g));
    }

    std::vector<element_id> const& flat_table() const noexcept {
      return *_table;
    }

    bool operator==(FiniteGroup const& that) const {
      return _order == that._order
             && (_table == that._table || *_table == *that._table);
    }

   private:
    FiniteGroup(std::size_t order, std::vector<element_id> table, bool check)
        : _order(order) {
      if (check) {
        validate(order, table);
      }
      std::vector<element_id> inv(order, 0);
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (table[a * order + b] == 0) {
            inv[a] = static_cast<element_id>(b);
            break;
          }
        }
      }
      _table   = std::make_shared<std::vector<element_id> const>(std::move(table));
      _inverse = std::make_shared<std::vector<element_id> const>(std::move(inv));
    }

    static void validate(std::size_t order, std::vector<element_id> const& t) {
      if (order == 0) {
        throw Error(ErrorCode::ZeroOrder, "a group has at least one element");
      }
      if (t.size() != order * order) {
        throw Error(ErrorCode::NotSquare, "table is not order x order");
      }
      auto at = [&](std::size_t a, std::size_t b) { return t[a * order + b]; };
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (at(a, b) >= order) {
            throw Error(ErrorCode::OutOfRange,
                        "entry (" + std::to_string(a) + "," + std::to_string(b)
                            + ") = " + std::to_string(at(a, b)));
          }
        }
      }
      for (std::size_t a = 0; a < order; ++a) {
        if (at(0, a) != a || at(a, 0) != a) {
          throw Error(ErrorCode::NoIdentityAtZero,
                      "0 does not act as identity on element "
                          + std::to_string(a));
        }
      }
      for (std::size_t a = 0; a < order; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < order && !found; ++b) {
          found = at(a, b) == 0 && at(b, a) == 0;
        }
        if (!found) {
          throw Error(ErrorCode::MissingInverse,
                      "element " + std::to_string(a) + " has no inverse");
        }
      }
      auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
        throw Error(ErrorCode::NotAssociative,
                    "triple (" + std::to_string(a) + "," + std::to_string(b)
                        + "," + std::to_string(c) + ")");
      };
      if (order * order * order <= 10'000'000) {
        for (std::size_t a = 0; a < order; ++a) {
          for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t c = 0; c < order; ++c) {
              if (at(at(a, b), c) != at(a, at(b, c))) {
                fail(a, b, c);
              }
            }
          }
        }
        return;
      }
      // Light's test: the set of middle elements g with (xg)y = x(gy) for all
      // x, y is closed under the operation, so checking a generating set
      // suffices.
      std::vector<bool>        in_closure(order, false);
      std::vector<std::size_t> closure;
      std::vector<std::size_t> gens;
      for (std::size_t g = 0; g < order; ++g) {
        if (in_closure[g]) {
          continue;
        }
        gens.push_back(g);
        std::vector<std::size_t> queue = {g};
        in_closure[g]                  = true;
        while (!queue.empty()) {
          std::size_t x = queue.back();
          queue.pop_back();
          closure.push_back(x);
          for (std::size_t k = 0; k < closure.size(); ++k) {
            for (std::size_t z : {at(x, closure[k]), at(closure[k], x)}) {
              if (!in_closure[z]) {
                in_closure[z] = true;
                queue.push_back(z);
              }
            }
          }
        }
      }
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t g : gens) {
          for (std::size_t c = 0; c < order; ++c) {
            if (at(at(a, g), c) != at(a, at(g, c))) {
              fail(a, g, c);
            }
          }
        }
      }
    }

    std::size_t                                    _order;
    std::shared_ptr<std::vector<element_id> const> _table;
    std::shared_ptr<std::vector<element_id> const> _inverse;
  };

  inline FiniteGroup
  make_group_from_table(std::vector<std::vector<element_id>> const& grid) {
    std::size_t const       n = grid.size();
    std::vector<element_id> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (grid[r].size() != n) {
        throw Error(ErrorCode::NotSquare,
                    "row " + std::to_string(r) + " has "
                        + std::to_string(grid[r].size()) + " entries, expected "
                        + std::to_string(n));
      }
      flat.insert(flat.end(), grid[r].begin(), grid[r].end());
    }
    return FiniteGroup::from_flat_table(n, std::move(flat));
  }

  inline FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::ZeroOrder, "cyclic group of order 0");
    }
    return FiniteGroup::from_product(
        n, [n](element_id a, element_id b) { return (a + b) % n; });
  }

  // The direct power G^k, elements encoded as in FunctionSpace(|G|, k).
  inline FiniteGroup direct_power_group(FiniteGroup const& g, std::size_t k) {
    FunctionSpace const fs(g.order(), k);
    std::vector<element_id> flat(fs.size() * fs.size());
    std::vector<element_id> u(k), v(k), w(k);
    for (element_id a = 0; a < fs.size(); ++a) {
      u = fs.decode(a);
      for (element_id b = 0; b < fs.size(); ++b) {
        v = fs.decode(b);
        for (std::size_t j = 0; j < k; ++j) {
          w[j] = g.product(u[j], v[j]);
        }
        flat[std::size_t(a) * fs.size() + b] = fs.encode(w);
      }
    }
    return FiniteGroup::from_flat_table(fs.size(), std::move(flat));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  struct Subgroup {
    FiniteGroup             parent;
    std::vector<element_id> members;  // sorted, members[0] == 0
    bool                    normal = false;

    bool contains(element_id x) const {
      return std::binary_search(members.begin(), members.end(), x);
    }
    std::size_t size() const noexcept {
      return members.size();
    }
  };

  namespace detail {
    inline bool is_normal(FiniteGroup const&             g,
                          std::vector<element_id> const& sorted_members) {
      for (element_id x = 0; x < g.order(); ++x) {
        for (element_id m : sorted_members) {
          if (!std::binary_search(sorted_members.begin(),
                                  sorted_members.end(),
                                  g.conjugate(x, m))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  inline Subgroup subgroup_generated(FiniteGroup const&             g,
                                     std::vector<element_id> const& gens) {
    std::vector<bool> in(g.order(), false);
    for (element_id x : gens) {
      if (x >= g.order()) {
        throw Error(ErrorCode::OutOfRange,
                    "generator " + std::to_string(x) + " not in group");
      }
    }
    std::vector<element_id> members = {0};
    in[0]                           = true;
    // In a finite group the closure under products is a subgroup.
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (element_id s : gens) {
        element_id y = g.product(members[k], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    bool normal = detail::is_normal(g, members);
    return Subgroup{g, std::move(members), normal};
  }

  // Checks that `members` is closed under product and inverse.
  inline Subgroup subgroup_from_members(FiniteGroup const&      g,
                                        std::vector<element_id> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup generated = subgroup_generated(g, members);
    if (generated.members != members) {
      throw Error(ErrorCode::NotGenerating,
                  "element set is not a subgroup (closure has "
                      + std::to_string(generated.size()) + " elements)");
    }
    return generated;
  }

  // Every subgroup of g, sorted by member set.  Intended for small groups.
  inline std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
    std::vector<std::vector<element_id>> found;
    auto known = [&](std::vector<element_id> const& m) {
      return std::find(found.begin(), found.end(), m) != found.end();
    };
    for (element_id x = 0; x < g.order(); ++x) {
      auto m = subgroup_generated(g, {x}).members;
      if (!known(m)) {
        found.push_back(std::move(m));
      }
    }
    // Every subgroup is a join of cyclic ones; close under pairwise joins.
    for (std::size_t a = 0; a < found.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        std::vector<element_id> gens = found[a];
        gens.insert(gens.end(), found[b].begin(), found[b].end());
        auto m = subgroup_generated(g, gens).members;
        if (!known(m)) {
          found.push_back(std::move(m));
        }
      }
    }
    std::sort(found.begin(), found.end());
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& m : found) {
      bool normal = detail::is_normal(g, m);
      out.push_back(Subgroup{g, std::move(m), normal});
    }
    return out;
  }

  // A subgroup relabelled as a group in its own right: local identifier k
  // stands for members[k].
  struct InducedGroup {
    FiniteGroup             group;
    std::vector<element_id> to_parent;

    element_id from_parent(element_id x) const {
      auto it = std::lower_bound(to_parent.begin(), to_parent.end(), x);
      if (it == to_parent.end() || *it != x) {
        throw Error(ErrorCode::OutOfRange,
                    "element " + std::to_string(x) + " not in subgroup");
      }
      return static_cast<element_id>(it - to_parent.begin());
    }
  };

  inline InducedGroup subgroup_as_group(Subgroup const& n) {
    InducedGroup out{FiniteGroup(), n.members};
    out.group = FiniteGroup::from_product(
        n.size(), [&](element_id a, element_id b) {
          return out.from_parent(n.parent.product(n.members[a], n.members[b]));
        });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients
  ////////////////////////////////////////////////////////////////////////

  struct QuotientData {
    FiniteGroup             parent;
    Subgroup                modulus;
    std::vector<element_id> coset_of;
    FiniteGroup             quotient;
    // transversal[A] is the least element of coset A; cosets are numbered by
    // increasing representative, so coset 0 is the modulus itself.
    std::vector<element_id> transversal;
  };

  inline QuotientData quotient_with_transversal(FiniteGroup const& g,
                                                Subgroup const&    n) {
    if (!n.normal) {
      throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
    }
    constexpr element_id    unset = ~element_id(0);
    std::vector<element_id> coset_of(g.order(), unset);
    std::vector<element_id> transversal;
    for (element_id x = 0; x < g.order(); ++x) {
      if (coset_of[x] != unset) {
        continue;
      }
      auto const id = static_cast<element_id>(transversal.size());
      transversal.push_back(x);
      for (element_id m : n.members) {
        coset_of[g.product(x, m)] = id;
      }
    }
    FiniteGroup quotient = FiniteGroup::from_product(
        transversal.size(), [&](element_id a, element_id b) {
          return coset_of[g.product(transversal[a], transversal[b])];
        });
    return QuotientData{
        g, n, std::move(coset_of), std::move(quotient), std::move(transversal)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Centre and element orders
  ////////////////////////////////////////////////////////////////////////

  struct CentreAndOrders {
    std::vector<element_id>  centre;
    std::vector<std::size_t> order_of;
  };

  inline CentreAndOrders centre_and_orders(FiniteGroup const& g) {
    CentreAndOrders out;
    for (element_id z = 0; z < g.order(); ++z) {
      bool central = true;
      for (element_id x = 0; x < g.order() && central; ++x) {
        central = g.product(z, x) == g.product(x, z);
      }
      if (central) {
        out.centre.push_back(z);
      }
    }
    out.order_of.resize(g.order());
    for (element_id a = 0; a < g.order(); ++a) {
      std::size_t k = 1;
      for (element_id p = a; p != 0; p = g.product(p, a)) {
        ++k;
      }
      out.order_of[a] = k;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  struct GroupMorphism {
    FiniteGroup             domain;
    FiniteGroup             codomain;
    std::vector<element_id> image;
    bool                    injective = false;
  };

  inline bool is_group_morphism(FiniteGroup const&             domain,
                                FiniteGroup const&             codomain,
                                std::vector<element_id> const& image) {
    if (image.size() != domain.order()) {
      return false;
    }
    for (element_id a = 0; a < domain.order(); ++a) {
      for (element_id b = 0; b < domain.order(); ++b) {
        if (image[domain.product(a, b)]
            != codomain.product(image[a], image[b])) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool has_repeats(std::vector<element_id> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
  }

  struct Letter {
    std::size_t generator;
    bool        inverse;
  };
  using Word = std::vector<Letter>;

  // Words over single-letter generator names; an upper-case letter denotes
  // the inverse of the corresponding lower-case generator, e.g. "yxYXX".
  inline Word parse_word(std::string_view text, std::string_view names) {
    Word w;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == ' ') {
        continue;
      }
      bool inverse = c >= 'A' && c <= 'Z';
      char lower   = inverse ? static_cast<char>(c - 'A' + 'a') : c;
      auto k       = names.find(lower);
      if (k == std::string_view::npos) {
        throw Error(ErrorCode::BadWord,
                    "unknown letter '" + std::string(1, c) + "' at position "
                        + std::to_string(pos) + " in \"" + std::string(text)
                        + "\"");
      }
      w.push_back(Letter{k, inverse});
    }
    return w;
  }

  inline element_id evaluate_word(FiniteGroup const&             g,
                                  Word const&                    w,
                                  std::vector<element_id> const& values) {
    element_id acc = 0;
    for (auto const& l : w) {
      element_id v = values[l.generator];
      acc          = g.product(acc, l.inverse ? g.inverse(v) : v);
    }
    return acc;
  }

  namespace detail {
    // Spanning tree of the right Cayley graph of `domain` w.r.t. gens:
    // visit order, and for each non-root visited element its parent and the
    // generator used.
    struct CayleyTree {
      std::vector<element_id>  order;
      std::vector<element_id>  parent;
      std::vector<std::size_t> via;
    };

    inline CayleyTree cayley_tree(FiniteGroup const&             domain,
                                  std::vector<element_id> const& gens) {
      CayleyTree        t;
      std::vector<bool> seen(domain.order(), false);
      t.parent.assign(domain.order(), 0);
      t.via.assign(domain.order(), 0);
      t.order.push_back(0);
      seen[0] = true;
      for (std::size_t k = 0; k < t.order.size(); ++k) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
          element_id y = domain.product(t.order[k], gens[s]);
          if (!seen[y]) {
            seen[y]     = true;
            t.parent[y] = t.order[k];
            t.via[y]    = s;
            t.order.push_back(y);
          }
        }
      }
      return t;
    }

    // Extends a generator assignment along the tree and checks every edge.
    inline bool extend(FiniteGroup const&             domain,
                       FiniteGroup const&             codomain,
                       std::vector<element_id> const& gens,
                       CayleyTree const&              tree,
                       std::vector<element_id> const& values,
                       std::vector<element_id>&       image) {
      image.assign(domain.order(), 0);
      for (std::size_t k = 1; k < tree.order.size(); ++k) {
        element_id y = tree.order[k];
        image[y] = codomain.product(image[tree.parent[y]], values[tree.via[y]]);
      }
      for (element_id x = 0; x < domain.order(); ++x) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
          if (image[domain.product(x, gens[s])]
              != codomain.product(image[x], values[s])) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // All morphisms domain -> codomain determined by images of `gens`
  // satisfying every relation, in lexicographic order of the generator
  // images.  The first generator's image range is split across `jobs`.
  inline std::vector<GroupMorphism>
  enumerate_group_morphisms(FiniteGroup const&             domain,
                            std::vector<element_id> const& gens,
                            std::vector<Word> const&       relations,
                            FiniteGroup const&             codomain,
                            bool                           injective_only,
                            std::size_t                    domain_order,
                            std::size_t                    jobs = 1) {
    for (auto const& w : relations) {
      for (auto const& l : w) {
        if (l.generator >= gens.size()) {
          throw Error(ErrorCode::BadWord, "relation uses undeclared generator");
        }
      }
    }
    auto const tree = detail::cayley_tree(domain, gens);
    if (tree.order.size() != domain_order || domain.order() != domain_order) {
      throw Error(ErrorCode::NotGenerating,
                  "generators reach " + std::to_string(tree.order.size())
                      + " elements, expected " + std::to_string(domain_order));
    }
    if (gens.empty()) {
      return {GroupMorphism{
          domain, codomain, std::vector<element_id>(domain.order(), 0), true}};
    }
    std::size_t const m = codomain.order();
    return collect_chunks(m, jobs, [&](std::size_t lo, std::size_t hi) {
      std::vector<GroupMorphism> out;
      std::vector<element_id>    values(gens.size(), 0);
      std::vector<element_id>    image;
      for (std::size_t first = lo; first < hi; ++first) {
        std::fill(values.begin(), values.end(), 0);
        values[0] = static_cast<element_id>(first);
        while (true) {
          bool ok = std::all_of(
              relations.begin(), relations.end(), [&](Word const& w) {
                return evaluate_word(codomain, w, values) == 0;
              });
          if (ok && detail::extend(domain, codomain, gens, tree, values, image)) {
            bool inj = !has_repeats(image);
            if (inj || !injective_only) {
              out.push_back(GroupMorphism{domain, codomain, image, inj});
            }
          }
          // odometer over values[1..]
          bool wrapped = true;
          for (std::size_t k = gens.size(); k-- > 1;) {
            if (++values[k] < m) {
              wrapped = false;
              break;
            }
            values[k] = 0;
          }
          if (wrapped) {
            break;
          }
        }
      }
      return out;
    });
  }

  // Brute-force isomorphism test, for groups of order <= 24.
  inline bool are_isomorphic(FiniteGroup const& a, FiniteGroup const& b) {
    if (a.order() != b.order()) {
      return false;
    }
    if (a.order() > 24) {
      throw Error(ErrorCode::SizeOverflow,
                  "isomorphism test limited to order <= 24");
    }
    std::vector<element_id> gens;
    std::vector<bool>       reached(a.order(), false);
    reached[0] = true;
    for (element_id x = 0; x < a.order(); ++x) {
      if (!reached[x]) {
        gens.push_back(x);
        for (element_id y : subgroup_generated(a, gens).members) {
          reached[y] = true;
        }
      }
    }
    auto const ordera = centre_and_orders(a).order_of;
    auto const orderb = centre_and_orders(b).order_of;
    auto const tree   = detail::cayley_tree(a, gens);
    std::vector<element_id> values(gens.size(), 0), image;
    auto rec = [&](auto&& self, std::size_t k) -> bool {
      if (k == gens.size()) {
        return detail::extend(a, b, gens, tree, values, image)
               && !has_repeats(image);
      }
      for (element_id v = 0; v < b.order(); ++v) {
        if (orderb[v] == ordera[gens[k]]) {
          values[k] = v;
          if (self(self, k + 1)) {
            return true;
          }
        }
      }
      return false;
    };
    return rec(rec, 0);
  }

}  // namespace csext

#endif  // CSEXT_GROUP_HPP_
