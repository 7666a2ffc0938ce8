// csext - extensions of completely simple semigroups by groups
//
// Left actions of a group by automorphisms, semidirect products T x| H with
// (t, A)(u, B) = (t * ^A u, AB), direct powers T^H, the wreath product
// T wr H = T^H x| H under B(^A f) = (BA)f, and the Rees-matrix copy
// M[G^H; I^H, Lambda^H; P^H] x| H of a wreath product U wr H.

#ifndef CSEXT_PRODUCTS_HPP_
#define CSEXT_PRODUCTS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "function_space.hpp"
#include "group.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace csext {

  struct ActionByAutomorphisms {
    FiniteGroup                          actor;
    FiniteSemigroup                      target;
    std::vector<std::vector<element_id>> act;  // act[A][t] = ^A t

    element_id apply(element_id a, element_id t) const noexcept {
      return act[a][t];
    }
  };

  // Checks the three action axioms.  The automorphism axiom is exhaustive
  // when |H| |T|^2 <= 5 * 10^7 and sampled (10^5 seeded triples) otherwise;
  // the identity and composition axioms are always exhaustive.
  inline ActionByAutomorphisms
  validate_action(FiniteGroup                          h,
                  FiniteSemigroup                      t,
                  std::vector<std::vector<element_id>> act) {
    std::size_t const nh = h.order();
    std::size_t const nt = t.size();
    if (act.size() != nh) {
      throw Error(ErrorCode::OutOfRange, "one permutation per actor element");
    }
    for (std::size_t a = 0; a < nh; ++a) {
      if (act[a].size() != nt) {
        throw Error(ErrorCode::OutOfRange,
                    "action table for " + std::to_string(a) + " is not total");
      }
      std::vector<bool> hit(nt, false);
      for (std::size_t x = 0; x < nt; ++x) {
        if (act[a][x] >= nt || hit[act[a][x]]) {
          throw Error(ErrorCode::NotAutomorphism,
                      "^" + std::to_string(a) + " is not a permutation (at "
                          + std::to_string(x) + ")");
        }
        hit[act[a][x]] = true;
      }
    }
    for (std::size_t x = 0; x < nt; ++x) {
      if (act[0][x] != x) {
        throw Error(ErrorCode::IdentityAxiomFails,
                    "identity moves " + std::to_string(x));
      }
    }
    for (element_id b = 0; b < nh; ++b) {
      for (element_id a = 0; a < nh; ++a) {
        auto const& ba = act[h.product(b, a)];
        for (std::size_t x = 0; x < nt; ++x) {
          if (ba[x] != act[b][act[a][x]]) {
            throw Error(ErrorCode::CompositionAxiomFails,
                        "^(BA)t != ^B(^At) at B=" + std::to_string(b)
                            + ", A=" + std::to_string(a)
                            + ", t=" + std::to_string(x));
          }
        }
      }
    }
    auto check = [&](std::size_t a, element_id x, element_id y) {
      if (act[a][t.product(x, y)] != t.product(act[a][x], act[a][y])) {
        throw Error(ErrorCode::NotAutomorphism,
                    "^A(tu) != ^At ^Au at A=" + std::to_string(a) + ", t="
                        + std::to_string(x) + ", u=" + std::to_string(y));
      }
    };
    if (nh * nt * nt <= 50'000'000) {
      for (std::size_t a = 0; a < nh; ++a) {
        for (element_id x = 0; x < nt; ++x) {
          for (element_id y = 0; y < nt; ++y) {
            check(a, x, y);
          }
        }
      }
    } else {
      std::mt19937_64                           rng(7);
      std::uniform_int_distribution<element_id> pick_t(
          0, static_cast<element_id>(nt - 1));
      std::uniform_int_distribution<std::size_t> pick_a(0, nh - 1);
      for (std::size_t k = 0; k < 100'000; ++k) {
        std::size_t a = pick_a(rng);
        element_id  x = pick_t(rng);
        check(a, x, pick_t(rng));
      }
    }
    return ActionByAutomorphisms{std::move(h), std::move(t), std::move(act)};
  }

  inline ActionByAutomorphisms trivial_action(FiniteGroup     h,
                                              FiniteSemigroup t) {
    std::vector<element_id> id(t.size());
    for (element_id x = 0; x < id.size(); ++x) {
      id[x] = x;
    }
    std::vector<std::vector<element_id>> act(h.order(), id);
    return validate_action(std::move(h), std::move(t), std::move(act));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect products
  ////////////////////////////////////////////////////////////////////////

  class SemidirectProduct {
   public:
    explicit SemidirectProduct(ActionByAutomorphisms action)
        : _action(std::make_shared<ActionByAutomorphisms const>(
            std::move(action))) {}

    ActionByAutomorphisms const& action() const noexcept {
      return *_action;
    }
    FiniteGroup const& actor() const noexcept {
      return _action->actor;
    }
    FiniteSemigroup const& target() const noexcept {
      return _action->target;
    }
    std::size_t size() const noexcept {
      return target().size() * actor().order();
    }

    // (t, A) -> t |H| + A
    element_id encode(element_id t, element_id a) const noexcept {
      return static_cast<element_id>(t * actor().order() + a);
    }
    std::pair<element_id, element_id> decode(element_id x) const noexcept {
      auto const nh = static_cast<element_id>(actor().order());
      return {x / nh, x % nh};
    }

    element_id product(element_id x, element_id y) const {
      auto const [t, a] = decode(x);
      auto const [u, b] = decode(y);
      return encode(target().product(t, _action->act[a][u]),
                    actor().product(a, b));
    }

    FiniteSemigroup as_semigroup(std::string label) const {
      FiniteSemigroup view(
          size(),
          [self = *this](element_id x, element_id y) {
            return self.product(x, y);
          },
          std::move(label));
      return size() <= FiniteSemigroup::materialize_cap ? view.materialize()
                                                        : view;
    }

    // Valid when the target is a group whose identity is element 0.
    FiniteGroup as_group() const {
      return FiniteGroup::from_product(
          size(), [this](element_id x, element_id y) { return product(x, y); });
    }

   private:
    std::shared_ptr<ActionByAutomorphisms const> _action;
  };

  inline SemidirectProduct semidirect_product(ActionByAutomorphisms action) {
    return SemidirectProduct(std::move(action));
  }

  // Evidence that the second projection T x| H -> H is a group congruence
  // whose kernel {(t, 1)} is a copy of T.
  struct ProjectionWitness {
    bool        projection_morphism = false;
    bool        surjective          = false;
    bool        kernel_embeds       = false;
    bool        exhaustive          = false;
    std::size_t kernel_size         = 0;
    std::vector<element_id> kernel_members;  // t -> (t, 1)

    bool holds() const noexcept {
      return projection_morphism && surjective && kernel_embeds;
    }
  };

  // Pair scans are exhaustive below 2.5 * 10^7 pairs, sampled (10^5 seeded
  // pairs) above.
  inline ProjectionWitness projection_congruence(SemidirectProduct const& p) {
    ProjectionWitness w;
    auto const&       h = p.actor();
    auto const&       t = p.target();
    for (element_id x = 0; x < t.size(); ++x) {
      w.kernel_members.push_back(p.encode(x, 0));
    }
    w.kernel_size = w.kernel_members.size();
    w.surjective  = t.size() > 0;
    auto proj_ok  = [&](element_id x, element_id y) {
      return p.decode(p.product(x, y)).second
             == h.product(p.decode(x).second, p.decode(y).second);
    };
    auto kernel_ok = [&](element_id x, element_id y) {
      return p.product(p.encode(x, 0), p.encode(y, 0))
             == p.encode(t.product(x, y), 0);
    };
    bool const small_p = p.size() * p.size() <= 25'000'000;
    bool const small_t = t.size() * t.size() <= 25'000'000;
    w.exhaustive       = small_p && small_t;
    w.projection_morphism = true;
    w.kernel_embeds       = true;
    std::mt19937_64 rng(11);
    if (small_p) {
      for (element_id x = 0; x < p.size() && w.projection_morphism; ++x) {
        for (element_id y = 0; y < p.size() && w.projection_morphism; ++y) {
          w.projection_morphism = proj_ok(x, y);
        }
      }
    } else {
      std::uniform_int_distribution<element_id> pick(
          0, static_cast<element_id>(p.size() - 1));
      for (std::size_t k = 0; k < 100'000 && w.projection_morphism; ++k) {
        element_id x          = pick(rng);
        w.projection_morphism = proj_ok(x, pick(rng));
      }
    }
    if (small_t) {
      for (element_id x = 0; x < t.size() && w.kernel_embeds; ++x) {
        for (element_id y = 0; y < t.size() && w.kernel_embeds; ++y) {
          w.kernel_embeds = kernel_ok(x, y);
        }
      }
    } else {
      std::uniform_int_distribution<element_id> pick(
          0, static_cast<element_id>(t.size() - 1));
      for (std::size_t k = 0; k < 100'000 && w.kernel_embeds; ++k) {
        element_id x    = pick(rng);
        w.kernel_embeds = kernel_ok(x, pick(rng));
      }
    }
    return w;
  }

  struct SameGreen {
    bool same_r = false;
    bool same_l = false;

    bool operator==(SameGreen const&) const = default;
  };

  // For T regular: (t,A) R (u,B) iff t R u, and (t,A) L (u,B) iff
  // ^(A^-1) t L ^(B^-1) u.  `green_t` supplies R and L on T.
  template <typename TGreen>
  SameGreen semidirect_green_predicate(SemidirectProduct const& p,
                                       element_id               x,
                                       element_id               y,
                                       TGreen const&            green_t) {
    auto const  [t, a] = p.decode(x);
    auto const  [u, b] = p.decode(y);
    auto const& h      = p.actor();
    auto const& act    = p.action();
    return SameGreen{green_t.same_r(t, u),
                     green_t.same_l(act.apply(h.inverse(a), t),
                                    act.apply(h.inverse(b), u))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct powers and wreath products
  ////////////////////////////////////////////////////////////////////////

  // f with (^A f)(B) = f(BA), on function codes of `fs` indexed by h.
  inline element_id translate(FunctionSpace const& fs,
                              FiniteGroup const&   h,
                              element_id           code,
                              element_id           a) {
    std::vector<element_id> out(fs.length());
    for (element_id b = 0; b < fs.length(); ++b) {
      out[b] = fs.value(code, h.product(b, a));
    }
    return fs.encode(out);
  }

  inline std::vector<std::vector<element_id>>
  translation_table(FunctionSpace const& fs, FiniteGroup const& h) {
    std::vector<std::vector<element_id>> act(h.order(),
                                             std::vector<element_id>(fs.size()));
    for (element_id a = 0; a < h.order(); ++a) {
      for (element_id f = 0; f < fs.size(); ++f) {
        act[a][f] = translate(fs, h, f, a);
      }
    }
    return act;
  }

  // T^k with the componentwise product; element codes as in
  // FunctionSpace(|T|, k).
  inline FiniteSemigroup direct_power(FiniteSemigroup const& t, std::size_t k) {
    FunctionSpace const fs(t.size(), k);
    auto                product = [t, fs](element_id x, element_id y) {
      std::uint64_t code = 0;
      for (std::size_t j = 0; j < fs.length(); ++j) {
        code = code * fs.base() + t.product(fs.value(x, j), fs.value(y, j));
      }
      return static_cast<element_id>(code);
    };
    FiniteSemigroup view(fs.size(), product, t.label() + "^" + std::to_string(k));
    return fs.size() <= FiniteSemigroup::materialize_cap ? view.materialize()
                                                         : view;
  }

  // T wr H = T^H x| H under the translation action.  With materialize set,
  // the product is tabulated, which is refused above the semigroup cap.
  inline SemidirectProduct wreath_product(FiniteSemigroup const& t,
                                          FiniteGroup const&     h,
                                          bool materialize = false) {
    FunctionSpace const fs(t.size(), h.order());
    if (materialize
        && fs.size() * h.order() > FiniteSemigroup::materialize_cap) {
      throw Error(ErrorCode::SizeOverflow,
                  "wreath product of " + std::to_string(fs.size() * h.order())
                      + " elements is too large to materialize");
    }
    return semidirect_product(
        validate_action(h, direct_power(t, h.order()), translation_table(fs, h)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees-matrix copy of a wreath product
  ////////////////////////////////////////////////////////////////////////

  // For U = M[G; I, Lambda; P] and a group H:
  //   U^H ~ M[G^H; I^H, Lambda^H; P^H] with A p^H_{xi,eta} = p_{A xi, A eta},
  // acted on by ^A(eta, f, xi) = (^A eta, ^A f, ^A xi).
  struct WreathCopy {
    ReesMatrixSemigroup base;
    FiniteGroup         h;
    FunctionSpace       i_functions;       // I^H
    FunctionSpace       lambda_functions;  // Lambda^H
    FunctionSpace       group_functions;   // G^H
    FiniteGroup         power_group;       // G^H as a group
    ReesMatrixSemigroup copy;              // M[G^H; I^H, Lambda^H; P^H]
    SemidirectProduct   product;           // copy x| H

    // A(p^H_{xi,eta})
    element_id sandwich_value(element_id xi, element_id eta, element_id a) const {
      return group_functions.value(copy.sandwich(xi, eta), a);
    }

    element_id translate_i(element_id eta, element_id a) const {
      return translate(i_functions, h, eta, a);
    }
    element_id translate_lambda(element_id xi, element_id a) const {
      return translate(lambda_functions, h, xi, a);
    }
    element_id translate_group(element_id f, element_id a) const {
      return translate(group_functions, h, f, a);
    }

    // F in U^H (FunctionSpace(|U|, |H|) code) -> (eta, f, xi) in the copy,
    // where A F = (A eta, A f, A xi).
    element_id from_power(element_id code) const {
      FunctionSpace const     u_functions(base.size(), h.order());
      std::vector<element_id> eta(h.order()), f(h.order()), xi(h.order());
      for (element_id a = 0; a < h.order(); ++a) {
        auto const e = base.decode(u_functions.value(code, a));
        eta[a]       = static_cast<element_id>(e.i);
        f[a]         = e.g;
        xi[a]        = static_cast<element_id>(e.lambda);
      }
      return copy.encode(RmsElement{i_functions.encode(eta),
                                    group_functions.encode(f),
                                    lambda_functions.encode(xi)});
    }

    // The same correspondence on whole wreath elements (F, A).
    element_id from_wreath(SemidirectProduct const& wreath, element_id x) const {
      auto const [code, a] = wreath.decode(x);
      return product.encode(from_power(code), a);
    }
  };

  inline WreathCopy rees_wreath_copy(ReesMatrixSemigroup const& u,
                                     FiniteGroup const&         h) {
    std::size_t const   k = h.order();
    FunctionSpace const fi(u.i_count(), k);
    FunctionSpace const fl(u.lambda_count(), k);
    FunctionSpace const fg(u.group().order(), k);
    FiniteGroup         power = direct_power_group(u.group(), k);
    std::vector<std::vector<element_id>> ph(fl.size(),
                                            std::vector<element_id>(fi.size()));
    std::vector<element_id> values(k);
    for (element_id xi = 0; xi < fl.size(); ++xi) {
      for (element_id eta = 0; eta < fi.size(); ++eta) {
        for (element_id a = 0; a < k; ++a) {
          values[a] = u.sandwich(fl.value(xi, a), fi.value(eta, a));
        }
        ph[xi][eta] = fg.encode(values);
      }
    }
    ReesMatrixSemigroup copy(power, fi.size(), fl.size(), std::move(ph));
    std::vector<std::vector<element_id>> act(k,
                                             std::vector<element_id>(copy.size()));
    auto const ti = translation_table(fi, h);
    auto const tl = translation_table(fl, h);
    auto const tg = translation_table(fg, h);
    for (element_id a = 0; a < k; ++a) {
      for (element_id x = 0; x < copy.size(); ++x) {
        auto const e = copy.decode(x);
        act[a][x]    = copy.encode(RmsElement{
            ti[a][e.i], tg[a][e.g], tl[a][e.lambda]});
      }
    }
    auto action = validate_action(
        h, copy.as_semigroup("copy of U^H"), std::move(act));
    return WreathCopy{u,
                      h,
                      fi,
                      fl,
                      fg,
                      std::move(power),
                      std::move(copy),
                      semidirect_product(std::move(action))};
  }

  // ^B(p^H_{xi,eta}) = p^H_{^B xi, ^B eta} over all B, xi, eta.  Returns the
  // number of instances checked; throws on the first failure.
  inline std::size_t check_translated_sandwich(WreathCopy const& w) {
    std::size_t checked = 0;
    for (element_id b = 0; b < w.h.order(); ++b) {
      for (element_id xi = 0; xi < w.lambda_functions.size(); ++xi) {
        for (element_id eta = 0; eta < w.i_functions.size(); ++eta) {
          element_id lhs = w.translate_group(w.copy.sandwich(xi, eta), b);
          element_id rhs = w.copy.sandwich(w.translate_lambda(xi, b),
                                           w.translate_i(eta, b));
          if (lhs != rhs) {
            throw Error(ErrorCode::VerificationFailed,
                        "translated sandwich differs at B=" + std::to_string(b)
                            + ", xi=" + std::to_string(xi)
                            + ", eta=" + std::to_string(eta));
          }
          ++checked;
        }
      }
    }
    return checked;
  }

  // Checks that F -> (eta, f, xi) is a bijective morphism from U wr H onto
  // the copy: exhaustive when |U wr H| <= 2000, otherwise on `samples`
  // seeded pairs (bijectivity is always checked).
  inline bool verify_wreath_copy_iso(WreathCopy const&        w,
                                     SemidirectProduct const& wreath,
                                     std::size_t              samples = 10'000) {
    std::size_t const  n = wreath.size();
    std::vector<bool>  hit(w.product.size(), false);
    if (n != w.product.size()) {
      return false;
    }
    for (element_id x = 0; x < n; ++x) {
      element_id y = w.from_wreath(wreath, x);
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    auto ok = [&](element_id x, element_id y) {
      return w.from_wreath(wreath, wreath.product(x, y))
             == w.product.product(w.from_wreath(wreath, x),
                                  w.from_wreath(wreath, y));
    };
    if (n <= 2000) {
      for (element_id x = 0; x < n; ++x) {
        for (element_id y = 0; y < n; ++y) {
          if (!ok(x, y)) {
            return false;
          }
        }
      }
      return true;
    }
    std::mt19937_64                           rng(13);
    std::uniform_int_distribution<element_id> pick(
        0, static_cast<element_id>(n - 1));
    for (std::size_t k = 0; k < samples; ++k) {
      element_id x = pick(rng);
      if (!ok(x, pick(rng))) {
        return false;
      }
    }
    return true;
  }

}  // namespace csext

#endif  // CSEXT_PRODUCTS_HPP_
