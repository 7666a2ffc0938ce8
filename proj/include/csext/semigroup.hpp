// csext - extensions of completely simple semigroups by groups
//
// Generic finite semigroups on identifiers 0, ..., n - 1.  A semigroup is
// either a materialized multiplication table or a composed view whose
// product is computed on demand from the components of a construction.

#ifndef CSEXT_SEMIGROUP_HPP_
#define CSEXT_SEMIGROUP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "parallel.hpp"

namespace csext {

  class FiniteSemigroup {
   public:
    using Product = std::function<element_id(element_id, element_id)>;

    // Largest size that materialize() will tabulate.
    static constexpr std::size_t materialize_cap = 4096;

    FiniteSemigroup(std::size_t size, Product product, std::string label)
        : _size(size), _product(std::move(product)), _label(std::move(label)) {}

    static FiniteSemigroup from_table(std::size_t             size,
                                      std::vector<element_id> table,
                                      std::string             label) {
      if (table.size() != size * size) {
        throw Error(ErrorCode::NotSquare, "semigroup table is not size x size");
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k] >= size) {
          throw Error(ErrorCode::OutOfRange,
                      "entry (" + std::to_string(k / size) + ","
                          + std::to_string(k % size) + ") out of range");
        }
      }
      auto t = std::make_shared<std::vector<element_id> const>(std::move(table));
      FiniteSemigroup s(
          size,
          [t, size](element_id a, element_id b) { return (*t)[a * size + b]; },
          std::move(label));
      s._table = std::move(t);
      return s;
    }

    static FiniteSemigroup from_group(FiniteGroup const& g, std::string label) {
      return from_table(g.order(), g.flat_table(), std::move(label));
    }

    std::size_t size() const noexcept {
      return _size;
    }

    element_id product(element_id a, element_id b) const {
      return _table ? (*_table)[a * _size + b] : _product(a, b);
    }

    std::string const& label() const noexcept {
      return _label;
    }

    bool is_materialized() const noexcept {
      return _table != nullptr;
    }

    FiniteSemigroup materialize() const {
      if (_table) {
        return *this;
      }
      if (_size > materialize_cap) {
        throw Error(ErrorCode::SizeOverflow,
                    _label + " has " + std::to_string(_size)
                        + " elements, above the materialization cap");
      }
      std::vector<element_id> t(_size * _size);
      for (element_id a = 0; a < _size; ++a) {
        for (element_id b = 0; b < _size; ++b) {
          t[a * _size + b] = _product(a, b);
        }
      }
      return from_table(_size, std::move(t), _label);
    }

   private:
    std::size_t                                    _size;
    Product                                        _product;
    std::string                                    _label;
    std::shared_ptr<std::vector<element_id> const> _table;
  };

  // Small fixtures.
  inline FiniteSemigroup left_zero_semigroup(std::size_t n) {
    return FiniteSemigroup(
        n, [](element_id a, element_id) { return a; }, "left-zero");
  }

  inline FiniteSemigroup right_zero_semigroup(std::size_t n) {
    return FiniteSemigroup(
        n, [](element_id, element_id b) { return b; }, "right-zero");
  }

  // x * y = 0 for all x, y.
  inline FiniteSemigroup null_semigroup(std::size_t n) {
    return FiniteSemigroup(
        n, [](element_id, element_id) { return element_id(0); }, "null");
  }

  inline std::vector<element_id> idempotents(FiniteSemigroup const& s) {
    std::vector<element_id> out;
    for (element_id e = 0; e < s.size(); ++e) {
      if (s.product(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Associativity
  ////////////////////////////////////////////////////////////////////////

  using Triple = std::array<element_id, 3>;

  // First non-associative triple, or nothing.  Exhaustive for size <= 200;
  // otherwise `samples` seeded random triples plus every triple of
  // idempotents (up to 10^6 of them).
  inline std::optional<Triple> find_non_associative(FiniteSemigroup const& s,
                                                    std::size_t samples
                                                    = 100'000,
                                                    std::uint64_t seed = 1) {
    auto bad = [&](element_id a, element_id b, element_id c) {
      return s.product(s.product(a, b), c) != s.product(a, s.product(b, c));
    };
    if (s.size() <= 200) {
      for (element_id a = 0; a < s.size(); ++a) {
        for (element_id b = 0; b < s.size(); ++b) {
          for (element_id c = 0; c < s.size(); ++c) {
            if (bad(a, b, c)) {
              return Triple{a, b, c};
            }
          }
        }
      }
      return std::nullopt;
    }
    std::mt19937_64                           rng(seed);
    std::uniform_int_distribution<element_id> pick(
        0, static_cast<element_id>(s.size() - 1));
    for (std::size_t k = 0; k < samples; ++k) {
      element_id a = pick(rng), b = pick(rng), c = pick(rng);
      if (bad(a, b, c)) {
        return Triple{a, b, c};
      }
    }
    auto const  e     = idempotents(s);
    std::size_t count = 0;
    for (element_id a : e) {
      for (element_id b : e) {
        for (element_id c : e) {
          if (bad(a, b, c)) {
            return Triple{a, b, c};
          }
          if (++count == 1'000'000) {
            return std::nullopt;
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups
  ////////////////////////////////////////////////////////////////////////

  // Sorted closure of gens under the product.
  inline std::vector<element_id>
  generated_subsemigroup(FiniteSemigroup const&         s,
                         std::vector<element_id> const& gens) {
    std::vector<bool>       in(s.size(), false);
    std::vector<element_id> out;
    for (element_id g : gens) {
      if (g >= s.size()) {
        throw Error(ErrorCode::OutOfRange, "generator out of range");
      }
      if (!in[g]) {
        in[g] = true;
        out.push_back(g);
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (element_id g : gens) {
        element_id y = s.product(out[k], g);
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  struct GreenClasses {
    std::vector<std::size_t> r_class_of;
    std::vector<std::size_t> l_class_of;
    std::vector<std::size_t> h_class_of;
    std::size_t              r_count = 0;
    std::size_t              l_count = 0;
    std::size_t              h_count = 0;

    bool same_r(element_id a, element_id b) const {
      return r_class_of[a] == r_class_of[b];
    }
    bool same_l(element_id a, element_id b) const {
      return l_class_of[a] == l_class_of[b];
    }
  };

  namespace detail {
    // Class ids numbered by first occurrence in identifier order.
    template <typename Key>
    std::size_t number_classes(std::vector<Key> const&   keys,
                               std::vector<std::size_t>& class_of) {
      std::map<Key, std::size_t> ids;
      class_of.resize(keys.size());
      for (std::size_t a = 0; a < keys.size(); ++a) {
        auto [it, fresh] = ids.emplace(keys[a], ids.size());
        class_of[a]      = it->second;
      }
      return ids.size();
    }

    // Principal one-sided ideal of every element, as bitsets.
    inline std::vector<std::vector<std::uint64_t>>
    principal_ideals(FiniteSemigroup const& s, bool right, std::size_t jobs) {
      std::size_t const n     = s.size();
      std::size_t const words = (n + 63) / 64;
      return collect_chunks(n, jobs, [&](std::size_t lo, std::size_t hi) {
        std::vector<std::vector<std::uint64_t>> out;
        for (std::size_t a = lo; a < hi; ++a) {
          std::vector<std::uint64_t> bits(words, 0);
          bits[a / 64] |= std::uint64_t(1) << (a % 64);
          for (element_id t = 0; t < n; ++t) {
            element_id x = right ? s.product(static_cast<element_id>(a), t)
                                 : s.product(t, static_cast<element_id>(a));
            bits[x / 64] |= std::uint64_t(1) << (x % 64);
          }
          out.push_back(std::move(bits));
        }
        return out;
      });
    }
  }  // namespace detail

  // Brute force: a R b iff aS^1 = bS^1, a L b iff S^1a = S^1b.  Quadratic
  // in time and memory; meant for semigroups of at most a few thousand
  // elements.
  inline GreenClasses green_classes(FiniteSemigroup const& s,
                                    std::size_t            jobs = 1) {
    if (s.size() > 20'000) {
      throw Error(ErrorCode::SizeOverflow,
                  "brute-force Green's relations limited to 20000 elements");
    }
    GreenClasses g;
    g.r_count = detail::number_classes(
        detail::principal_ideals(s, true, jobs), g.r_class_of);
    g.l_count = detail::number_classes(
        detail::principal_ideals(s, false, jobs), g.l_class_of);
    std::vector<std::pair<std::size_t, std::size_t>> rl(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      rl[a] = {g.r_class_of[a], g.l_class_of[a]};
    }
    g.h_count = detail::number_classes(rl, g.h_class_of);
    return g;
  }

  // a in bS^1, by scanning the candidate right factors.
  inline bool in_right_ideal(FiniteSemigroup const&         s,
                             element_id                     a,
                             element_id                     b,
                             std::vector<element_id> const& candidates) {
    if (a == b) {
      return true;
    }
    return std::any_of(candidates.begin(), candidates.end(), [&](element_id t) {
      return s.product(b, t) == a;
    });
  }

  // a in S^1b, by scanning the candidate left factors.
  inline bool in_left_ideal(FiniteSemigroup const&         s,
                            element_id                     a,
                            element_id                     b,
                            std::vector<element_id> const& candidates) {
    if (a == b) {
      return true;
    }
    return std::any_of(candidates.begin(), candidates.end(), [&](element_id t) {
      return s.product(t, b) == a;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Complete simplicity
  ////////////////////////////////////////////////////////////////////////

  // The product of all elements lies in the minimal ideal K, and K is the
  // two-sided ideal it generates; a finite semigroup is completely simple
  // iff K is everything.
  inline std::vector<element_id> minimal_ideal(FiniteSemigroup const& s) {
    element_id z = 0;
    for (element_id a = 1; a < s.size(); ++a) {
      z = s.product(z, a);
    }
    std::vector<bool>       in(s.size(), false);
    std::vector<element_id> out = {z};
    in[z]                       = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (element_id t = 0; t < s.size(); ++t) {
        for (element_id y : {s.product(out[k], t), s.product(t, out[k])}) {
          if (!in[y]) {
            in[y] = true;
            out.push_back(y);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool is_completely_simple(FiniteSemigroup const& s) {
    if (s.size() == 0) {
      return false;
    }
    return minimal_ideal(s).size() == s.size() && !idempotents(s).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  struct MorphismCheck {
    bool                                         morphism  = false;
    bool                                         injective = false;
    std::optional<std::pair<element_id, element_id>> witness;
  };

  // Exhaustive over all ordered pairs; the witness is the least violating
  // pair in lexicographic order regardless of `jobs`.
  inline MorphismCheck is_semigroup_morphism(std::vector<element_id> const& map,
                                             FiniteSemigroup const&         s,
                                             FiniteSemigroup const&         t,
                                             std::size_t jobs = 1) {
    if (map.size() != s.size()) {
      throw Error(ErrorCode::OutOfRange, "map is not total on the domain");
    }
    for (element_id v : map) {
      if (v >= t.size()) {
        throw Error(ErrorCode::OutOfRange, "map value outside the codomain");
      }
    }
    using Pair = std::pair<element_id, element_id>;
    auto parts = map_chunks(
        s.size(), jobs, [&](std::size_t lo, std::size_t hi) -> std::optional<Pair> {
          for (std::size_t a = lo; a < hi; ++a) {
            auto const x = static_cast<element_id>(a);
            for (element_id b = 0; b < s.size(); ++b) {
              if (map[s.product(x, b)] != t.product(map[x], map[b])) {
                return Pair{x, b};
              }
            }
          }
          return std::nullopt;
        });
    MorphismCheck out;
    for (auto const& p : parts) {
      if (p) {
        out.witness = p;
        break;
      }
    }
    out.morphism  = !out.witness.has_value();
    out.injective = !has_repeats(map);
    return out;
  }

  // Tries every assignment of gens into t in lexicographic order and returns
  // the first one that extends to an injective morphism.
  inline std::optional<std::vector<element_id>>
  brute_force_embedding_search(FiniteSemigroup const&         s,
                               FiniteSemigroup const&         t,
                               std::vector<element_id> const& gens) {
    if (gens.empty()) {
      throw Error(ErrorCode::NotGenerating, "empty generating set");
    }
    double space = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      space *= static_cast<double>(t.size());
    }
    if (space > 1e7) {
      throw Error(ErrorCode::SearchSpaceTooLarge,
                  std::to_string(t.size()) + "^" + std::to_string(gens.size())
                      + " assignments");
    }
    if (generated_subsemigroup(s, gens).size() != s.size()) {
      throw Error(ErrorCode::NotGenerating, "gens do not generate the domain");
    }
    constexpr element_id    unset = ~element_id(0);
    std::vector<element_id> values(gens.size(), 0);
    std::vector<element_id> image;
    std::vector<element_id> queue;
    auto                    try_extend = [&]() -> bool {
      image.assign(s.size(), unset);
      queue.clear();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (image[gens[k]] != unset && image[gens[k]] != values[k]) {
          return false;
        }
        if (image[gens[k]] == unset) {
          image[gens[k]] = values[k];
          queue.push_back(gens[k]);
        }
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        element_id x = queue[q];
        for (std::size_t k = 0; k < gens.size(); ++k) {
          element_id y = s.product(x, gens[k]);
          element_id v = t.product(image[x], values[k]);
          if (image[y] == unset) {
            image[y] = v;
            queue.push_back(y);
          } else if (image[y] != v) {
            return false;
          }
        }
      }
      return !has_repeats(image);
    };
    while (true) {
      if (try_extend()) {
        return image;
      }
      std::size_t k = gens.size();
      while (k > 0) {
        --k;
        if (++values[k] < t.size()) {
          break;
        }
        values[k] = 0;
        if (k == 0) {
          return std::nullopt;
        }
      }
    }
  }

}  // namespace csext

#endif  // CSEXT_SEMIGROUP_HPP_
