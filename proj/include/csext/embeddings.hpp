// csext - extensions of completely simple semigroups by groups
//
// The three constructive embeddings:
//
//   kappa: G -> N wr H,           g -> (f_g, gN)
//   nu:    S -> U wr H (copy),    (i, g, l) -> ((const i, f_g, const l), gN)
//   psi:   S -> V x| H,           (i, g, l) -> ((i, f_g, (gN, l)), gN)
//
// where H = G/N, r_A is the least element of coset A and
// f_g(A) = r_A g r_{A gN}^-1 takes values in N.

#ifndef CSEXT_EMBEDDINGS_HPP_
#define CSEXT_EMBEDDINGS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "function_space.hpp"
#include "group.hpp"
#include "products.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace csext {

  // f_g for every g in G, as codes in FunctionSpace(|N|, |H|) with values
  // in N relabelled as a group.
  struct CocycleTable {
    QuotientData            quotient;
    InducedGroup            n;
    FunctionSpace           functions;
    FiniteGroup             power_group;  // N^H
    std::vector<element_id> f;

    FiniteGroup const& h() const noexcept {
      return quotient.quotient;
    }

    element_id value(element_id g, element_id a) const {
      return functions.value(f[g], a);
    }

    element_id translate(element_id code, element_id a) const {
      return csext::translate(functions, h(), code, a);
    }
  };

  inline CocycleTable cocycle_table(FiniteGroup const& g, Subgroup const& n) {
    if (!n.normal) {
      throw Error(ErrorCode::NotNormal, "cocycle needs a normal subgroup");
    }
    QuotientData        q  = quotient_with_transversal(g, n);
    InducedGroup        nn = subgroup_as_group(n);
    FunctionSpace const fs(nn.group.order(), q.quotient.order());
    FiniteGroup         power = direct_power_group(nn.group, fs.length());
    std::vector<element_id> f(g.order());
    std::vector<element_id> values(fs.length());
    for (element_id x = 0; x < g.order(); ++x) {
      for (element_id a = 0; a < fs.length(); ++a) {
        element_id const r_a  = q.transversal[a];
        element_id const next = q.quotient.product(a, q.coset_of[x]);
        element_id const v
            = g.product(g.product(r_a, x), g.inverse(q.transversal[next]));
        if (!n.contains(v)) {
          throw Error(ErrorCode::VerificationFailed,
                      "f_" + std::to_string(x) + " leaves N at coset "
                          + std::to_string(a));
        }
        values[a] = nn.from_parent(v);
      }
      f[x] = fs.encode(values);
    }
    if (f[0] != fs.constant(0)) {
      throw Error(ErrorCode::VerificationFailed,
                  "f at the identity is not the constant identity");
    }
    return CocycleTable{
        std::move(q), std::move(nn), fs, std::move(power), std::move(f)};
  }

  // First (g, h) with f_gh != f_g * ^(gN) f_h, if any.
  inline std::optional<std::pair<element_id, element_id>>
  find_cocycle_violation(FiniteGroup const& g, CocycleTable const& c) {
    for (element_id x = 0; x < g.order(); ++x) {
      element_id const a = c.quotient.coset_of[x];
      for (element_id y = 0; y < g.order(); ++y) {
        element_id rhs = c.power_group.product(c.f[x], c.translate(c.f[y], a));
        if (c.f[g.product(x, y)] != rhs) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // kappa
  ////////////////////////////////////////////////////////////////////////

  struct KkEmbedding {
    CocycleTable            cocycle;
    SemidirectProduct       target;  // N^H x| H
    std::vector<element_id> map;
    MorphismCheck           check;
  };

  inline SemidirectProduct kk_target(CocycleTable const& c) {
    return wreath_product(FiniteSemigroup::from_group(c.n.group, "N"), c.h());
  }

  inline KkEmbedding
  kk_embedding(FiniteGroup const& g, Subgroup const& n, std::size_t jobs = 1) {
    CocycleTable            c      = cocycle_table(g, n);
    SemidirectProduct       target = kk_target(c);
    std::vector<element_id> map(g.order());
    for (element_id x = 0; x < g.order(); ++x) {
      map[x] = target.encode(c.f[x], c.quotient.coset_of[x]);
    }
    MorphismCheck check = is_semigroup_morphism(
        map, FiniteSemigroup::from_group(g, "G"), target.as_semigroup("N wr H"),
        jobs);
    return KkEmbedding{
        std::move(c), std::move(target), std::move(map), std::move(check)};
  }

  ////////////////////////////////////////////////////////////////////////
  // nu
  ////////////////////////////////////////////////////////////////////////

  struct NuEmbedding {
    GroupCongruence         rho;
    KernelRms               kernel;
    CocycleTable            cocycle;
    WreathCopy              wreath;
    std::vector<element_id> map;  // S -> wreath.product
    bool                    central = false;
    MorphismCheck           check;
  };

  // Constructed for any S; the morphism verdict is part of the result.
  inline NuEmbedding central_embedding_nu(ReesMatrixSemigroup const& s,
                                          Subgroup const&            n,
                                          std::size_t                jobs = 1) {
    if (!s.normalized()) {
      throw Error(ErrorCode::NotNormalized, "nu needs a normalized sandwich");
    }
    GroupCongruence rho     = congruence_from_normal(s, n);
    KernelRms       kernel  = kernel_rms(rho);
    CocycleTable    cocycle = cocycle_table(s.group(), n);
    WreathCopy      wreath  = rees_wreath_copy(kernel.rms, cocycle.h());
    std::vector<element_id> map(s.size());
    for (element_id x = 0; x < s.size(); ++x) {
      auto const e   = s.decode(x);
      auto const eta = wreath.i_functions.constant(static_cast<element_id>(e.i));
      auto const xi
          = wreath.lambda_functions.constant(static_cast<element_id>(e.lambda));
      map[x] = wreath.product.encode(
          wreath.copy.encode(RmsElement{eta, cocycle.f[e.g], xi}),
          cocycle.quotient.coset_of[e.g]);
    }
    bool          central = is_central_rms(s);
    MorphismCheck check   = is_semigroup_morphism(
        map, s.as_semigroup("S"), wreath.product.as_semigroup("U wr H"), jobs);
    return NuEmbedding{std::move(rho),
                       std::move(kernel),
                       std::move(cocycle),
                       std::move(wreath),
                       std::move(map),
                       central,
                       std::move(check)};
  }

  ////////////////////////////////////////////////////////////////////////
  // psi
  ////////////////////////////////////////////////////////////////////////

  // V = M[N^H; I, H x Lambda; Q] with q_{(B,l),j} = ^B f_{p_lj}, acted on by
  // ^A(i, f, (B, l)) = (i, ^A f, (AB, l)).  The pair (B, l) has column index
  // B |Lambda| + l.
  struct GeneralTarget {
    CocycleTable        cocycle;
    std::size_t         lambda_count = 0;
    ReesMatrixSemigroup v;
    SemidirectProduct   product;  // V x| H

    std::size_t pair_index(element_id b, std::size_t lambda) const noexcept {
      return b * lambda_count + lambda;
    }
  };

  inline GeneralTarget general_target(ReesMatrixSemigroup const& s,
                                      CocycleTable               cocycle) {
    auto const&       h  = cocycle.h();
    std::size_t const nl = s.lambda_count();
    std::vector<std::vector<element_id>> q(h.order() * nl,
                                           std::vector<element_id>(s.i_count()));
    for (element_id b = 0; b < h.order(); ++b) {
      for (std::size_t l = 0; l < nl; ++l) {
        for (std::size_t j = 0; j < s.i_count(); ++j) {
          q[b * nl + l][j] = cocycle.translate(cocycle.f[s.sandwich(l, j)], b);
        }
      }
    }
    ReesMatrixSemigroup v(
        cocycle.power_group, s.i_count(), h.order() * nl, std::move(q));
    std::vector<std::vector<element_id>> act(h.order(),
                                             std::vector<element_id>(v.size()));
    for (element_id a = 0; a < h.order(); ++a) {
      for (element_id x = 0; x < v.size(); ++x) {
        auto const        e = v.decode(x);
        element_id const  b = static_cast<element_id>(e.lambda / nl);
        std::size_t const l = e.lambda % nl;
        act[a][x]           = v.encode(RmsElement{e.i,
                                        cocycle.translate(e.g, a),
                                        h.product(a, b) * nl + l});
      }
    }
    auto action = validate_action(h, v.as_semigroup("V"), std::move(act));
    return GeneralTarget{std::move(cocycle),
                         nl,
                         std::move(v),
                         semidirect_product(std::move(action))};
  }

  struct PsiEmbedding {
    GeneralTarget           target;
    std::vector<element_id> map;  // S -> V x| H
    MorphismCheck           check;
  };

  inline PsiEmbedding general_embedding_psi(ReesMatrixSemigroup const& s,
                                            Subgroup const&            n,
                                            std::size_t                jobs = 1) {
    if (!s.normalized()) {
      throw Error(ErrorCode::NotNormalized, "psi needs a normalized sandwich");
    }
    // Validates the preconditions on N.
    congruence_from_normal(s, n);
    GeneralTarget target = general_target(s, cocycle_table(s.group(), n));
    auto const&   c      = target.cocycle;
    std::vector<element_id> map(s.size());
    for (element_id x = 0; x < s.size(); ++x) {
      auto const e    = s.decode(x);
      element_id coset = c.quotient.coset_of[e.g];
      map[x]          = target.product.encode(
          target.v.encode(
              RmsElement{e.i, c.f[e.g], target.pair_index(coset, e.lambda)}),
          coset);
    }
    MorphismCheck check = is_semigroup_morphism(
        map, s.as_semigroup("S"), target.product.as_semigroup("V x| H"), jobs);
    return PsiEmbedding{std::move(target), std::move(map), std::move(check)};
  }

  // f_{g p_lj h} = f_g * q_{(gN, l), j} * ^(gN) f_h for all g, l, j, h.
  // Returns the number of instances; throws on the first failure.
  inline std::size_t check_psi_identity(ReesMatrixSemigroup const& s,
                                        GeneralTarget const&       t) {
    auto const& g       = s.group();
    auto const& c       = t.cocycle;
    std::size_t checked = 0;
    for (element_id x = 0; x < g.order(); ++x) {
      element_id const a = c.quotient.coset_of[x];
      for (std::size_t l = 0; l < s.lambda_count(); ++l) {
        for (std::size_t j = 0; j < s.i_count(); ++j) {
          element_id const q = t.v.sandwich(t.pair_index(a, l), j);
          for (element_id y = 0; y < g.order(); ++y) {
            element_id lhs
                = c.f[g.product(g.product(x, s.sandwich(l, j)), y)];
            element_id rhs = c.power_group.product(
                c.power_group.product(c.f[x], q), c.translate(c.f[y], a));
            if (lhs != rhs) {
              throw Error(ErrorCode::VerificationFailed,
                          "psi identity fails at g=" + std::to_string(x)
                              + ", l=" + std::to_string(l)
                              + ", j=" + std::to_string(j)
                              + ", h=" + std::to_string(y));
            }
            ++checked;
          }
        }
      }
    }
    return checked;
  }

  // Each H-class {(i, x, m)} of V is a group isomorphic to N^H via
  // x -> (i, x q_{m i}^-1, m).  Returns the number of classes verified.
  inline std::size_t verify_maximal_subgroups(GeneralTarget const& t) {
    auto const& v     = t.v;
    auto const& power = v.group();
    std::size_t count = 0;
    for (std::size_t i = 0; i < v.i_count(); ++i) {
      for (std::size_t m = 0; m < v.lambda_count(); ++m) {
        element_id const qinv = power.inverse(v.sandwich(m, i));
        auto phi = [&](element_id x) {
          return v.encode(RmsElement{i, power.product(x, qinv), m});
        };
        std::vector<element_id> image(power.order());
        for (element_id x = 0; x < power.order(); ++x) {
          image[x] = phi(x);
        }
        if (has_repeats(image)) {
          throw Error(ErrorCode::VerificationFailed, "H-class map not injective");
        }
        for (element_id x = 0; x < power.order(); ++x) {
          for (element_id y = 0; y < power.order(); ++y) {
            if (v.product(image[x], image[y]) != image[power.product(x, y)]) {
              throw Error(ErrorCode::VerificationFailed,
                          "H-class (" + std::to_string(i) + ","
                              + std::to_string(m) + ") is not a copy of N^H");
            }
          }
        }
        ++count;
      }
    }
    return count;
  }

  // With I and Lambda singletons, ((0, f, (B, 0)), A) is identified with
  // (f, A); psi and kappa agree when every image has B = A and the same
  // (f, A).
  inline bool psi_equals_kappa_check(FiniteGroup const& g, Subgroup const& n) {
    ReesMatrixSemigroup s(g, 1, 1, {{0}});
    PsiEmbedding const  psi   = general_embedding_psi(s, n);
    KkEmbedding const   kappa = kk_embedding(g, n);
    if (!psi.check.morphism || !kappa.check.morphism) {
      return false;
    }
    for (element_id x = 0; x < g.order(); ++x) {
      auto const [vx, a] = psi.target.product.decode(psi.map[s.encode({0, x, 0})]);
      auto const e       = psi.target.v.decode(vx);
      if (e.lambda != a) {
        return false;
      }
      if (kappa.target.encode(e.g, a) != kappa.map[x]) {
        return false;
      }
    }
    return true;
  }

}  // namespace csext

#endif  // CSEXT_EMBEDDINGS_HPP_
