// csext - extensions of completely simple semigroups by groups
//
// Rees matrix semigroups M[G; I, Lambda; P] over a finite group, with
// elements (i, g, lambda) multiplied by (i, g, l)(j, h, m) = (i, g p_lj h, m).
// Index sets are 0-based and index 0 is the distinguished row/column of a
// normalized sandwich matrix.

#ifndef CSEXT_REES_HPP_
#define CSEXT_REES_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "semigroup.hpp"

namespace csext {

  struct RmsElement {
    std::size_t i      = 0;
    element_id  g      = 0;
    std::size_t lambda = 0;

    auto operator<=>(RmsElement const&) const = default;
  };

  class ReesMatrixSemigroup {
   public:
    // sandwich[lambda][i]
    ReesMatrixSemigroup(FiniteGroup                          group,
                        std::size_t                          i_count,
                        std::size_t                          lambda_count,
                        std::vector<std::vector<element_id>> sandwich)
        : _group(std::move(group)),
          _i_count(i_count),
          _lambda_count(lambda_count),
          _sandwich(std::move(sandwich)) {
      if (i_count == 0 || lambda_count == 0) {
        throw Error(ErrorCode::ZeroOrder, "empty index set");
      }
      if (_sandwich.size() != lambda_count) {
        throw Error(ErrorCode::NotSquare,
                    "sandwich matrix needs " + std::to_string(lambda_count)
                        + " rows");
      }
      for (std::size_t l = 0; l < lambda_count; ++l) {
        if (_sandwich[l].size() != i_count) {
          throw Error(ErrorCode::NotSquare,
                      "sandwich row " + std::to_string(l) + " needs "
                          + std::to_string(i_count) + " entries");
        }
        for (element_id p : _sandwich[l]) {
          if (p >= _group.order()) {
            throw Error(ErrorCode::OutOfRange,
                        "sandwich entry " + std::to_string(p)
                            + " is not a group element");
          }
        }
      }
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }
    std::size_t i_count() const noexcept {
      return _i_count;
    }
    std::size_t lambda_count() const noexcept {
      return _lambda_count;
    }
    element_id sandwich(std::size_t lambda, std::size_t i) const noexcept {
      return _sandwich[lambda][i];
    }
    std::vector<std::vector<element_id>> const& sandwich() const noexcept {
      return _sandwich;
    }
    std::size_t size() const noexcept {
      return _i_count * _group.order() * _lambda_count;
    }

    bool normalized() const noexcept {
      for (std::size_t i = 0; i < _i_count; ++i) {
        if (_sandwich[0][i] != 0) {
          return false;
        }
      }
      for (std::size_t l = 0; l < _lambda_count; ++l) {
        if (_sandwich[l][0] != 0) {
          return false;
        }
      }
      return true;
    }

    // Identifiers are lexicographic in (i, g, lambda).
    element_id encode(RmsElement const& x) const noexcept {
      return static_cast<element_id>((x.i * _group.order() + x.g)
                                         * _lambda_count
                                     + x.lambda);
    }

    RmsElement decode(element_id id) const noexcept {
      std::size_t const lambda = id % _lambda_count;
      std::size_t const rest   = id / _lambda_count;
      return RmsElement{rest / _group.order(),
                        static_cast<element_id>(rest % _group.order()),
                        lambda};
    }

    RmsElement product(RmsElement const& a, RmsElement const& b) const noexcept {
      element_id const mid = _group.product(
          _group.product(a.g, _sandwich[a.lambda][b.i]), b.g);
      return RmsElement{a.i, mid, b.lambda};
    }

    element_id product(element_id a, element_id b) const noexcept {
      return encode(product(decode(a), decode(b)));
    }

    FiniteSemigroup as_semigroup(std::string label = "rms") const {
      FiniteSemigroup view(
          size(),
          [self = *this](element_id a, element_id b) {
            return self.product(a, b);
          },
          std::move(label));
      return size() <= FiniteSemigroup::materialize_cap ? view.materialize()
                                                        : view;
    }

    bool operator==(ReesMatrixSemigroup const& that) const {
      return _group == that._group && _i_count == that._i_count
             && _lambda_count == that._lambda_count
             && _sandwich == that._sandwich;
    }

   private:
    FiniteGroup                          _group;
    std::size_t                          _i_count;
    std::size_t                          _lambda_count;
    std::vector<std::vector<element_id>> _sandwich;
  };

  inline RmsElement rms_product(RmsElement const&          a,
                                RmsElement const&          b,
                                ReesMatrixSemigroup const& s) {
    return s.product(a, b);
  }

  // Green's relations in Rees coordinates: R iff equal i, L iff equal lambda.
  struct ReesGreen {
    ReesMatrixSemigroup const* s;

    bool same_r(element_id a, element_id b) const {
      return s->decode(a).i == s->decode(b).i;
    }
    bool same_l(element_id a, element_id b) const {
      return s->decode(a).lambda == s->decode(b).lambda;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Normalization and centrality
  ////////////////////////////////////////////////////////////////////////

  struct Normalization {
    ReesMatrixSemigroup     normalized;
    std::vector<element_id> iso;  // identifier in S -> identifier in copy
  };

  // p'_{lj} = p_00 p_l0^-1 p_lj p_0j^-1 and
  // (i, g, l) -> (i, p_0i g p_l0 p_00^-1, l).
  inline Normalization normalize_rms(ReesMatrixSemigroup const& s) {
    auto const& g = s.group();
    auto        p = [&](std::size_t l, std::size_t j) { return s.sandwich(l, j); };
    std::vector<std::vector<element_id>> q(
        s.lambda_count(), std::vector<element_id>(s.i_count()));
    for (std::size_t l = 0; l < s.lambda_count(); ++l) {
      for (std::size_t j = 0; j < s.i_count(); ++j) {
        q[l][j] = g.product(
            g.product(g.product(p(0, 0), g.inverse(p(l, 0))), p(l, j)),
            g.inverse(p(0, j)));
      }
    }
    ReesMatrixSemigroup     t(g, s.i_count(), s.lambda_count(), std::move(q));
    std::vector<element_id> iso(s.size());
    for (element_id x = 0; x < s.size(); ++x) {
      auto const e = s.decode(x);
      element_id h = g.product(
          g.product(g.product(p(0, e.i), e.g), p(e.lambda, 0)),
          g.inverse(p(0, 0)));
      iso[x] = t.encode(RmsElement{e.i, h, e.lambda});
    }
    return Normalization{std::move(t), std::move(iso)};
  }

  inline bool is_central_rms(ReesMatrixSemigroup const& s) {
    if (!s.normalized()) {
      throw Error(ErrorCode::NotNormalized,
                  "centrality criterion needs a normalized sandwich matrix");
    }
    auto const centre = centre_and_orders(s.group()).centre;
    for (auto const& row : s.sandwich()) {
      for (element_id p : row) {
        if (!std::binary_search(centre.begin(), centre.end(), p)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group congruences
  ////////////////////////////////////////////////////////////////////////

  struct GroupCongruence {
    ReesMatrixSemigroup     host;
    Subgroup                normal_sub;
    QuotientData            quotient;
    std::vector<element_id> kernel_members;  // sorted identifiers in host

    // The quotient map (i, g, l) -> gN.
    element_id class_of(element_id x) const {
      return quotient.coset_of[host.decode(x).g];
    }
    bool related(element_id a, element_id b) const {
      return class_of(a) == class_of(b);
    }
  };

  // The kernel M[N; I, Lambda; P] as a Rees matrix semigroup over N
  // relabelled as a group, and its inclusion into the host.
  struct KernelRms {
    InducedGroup            n;
    ReesMatrixSemigroup     rms;
    std::vector<element_id> inclusion;
  };

  inline KernelRms kernel_rms(GroupCongruence const& rho) {
    auto const& s = rho.host;
    InducedGroup n = subgroup_as_group(rho.normal_sub);
    std::vector<std::vector<element_id>> p(s.lambda_count(),
                                           std::vector<element_id>(s.i_count()));
    for (std::size_t l = 0; l < s.lambda_count(); ++l) {
      for (std::size_t j = 0; j < s.i_count(); ++j) {
        p[l][j] = n.from_parent(s.sandwich(l, j));
      }
    }
    ReesMatrixSemigroup u(n.group, s.i_count(), s.lambda_count(), std::move(p));
    std::vector<element_id> inclusion(u.size());
    for (element_id x = 0; x < u.size(); ++x) {
      auto e       = u.decode(x);
      inclusion[x] = s.encode(RmsElement{e.i, n.to_parent[e.g], e.lambda});
    }
    return KernelRms{std::move(n), std::move(u), std::move(inclusion)};
  }

  // The congruence (i,g,l) rho (j,h,m) iff gh^-1 in N.  Re-verified rather
  // than trusted: the quotient map is checked to be a morphism onto G/N,
  // compatibility is checked on all triples when |S| <= 200, and the kernel
  // is checked to be completely simple.
  inline GroupCongruence congruence_from_normal(ReesMatrixSemigroup const& s,
                                                Subgroup const&            n) {
    if (!n.normal) {
      throw Error(ErrorCode::NotNormal, "congruence needs a normal subgroup");
    }
    for (std::size_t l = 0; l < s.lambda_count(); ++l) {
      for (std::size_t j = 0; j < s.i_count(); ++j) {
        if (!n.contains(s.sandwich(l, j))) {
          throw Error(ErrorCode::EntryOutsideN,
                      "sandwich entry p[" + std::to_string(l) + "]["
                          + std::to_string(j) + "] = "
                          + std::to_string(s.sandwich(l, j)));
        }
      }
    }
    GroupCongruence rho{s, n, quotient_with_transversal(s.group(), n), {}};
    for (element_id x = 0; x < s.size(); ++x) {
      if (rho.class_of(x) == 0) {
        rho.kernel_members.push_back(x);
      }
    }
    auto fail = [](std::string const& what) {
      throw Error(ErrorCode::VerificationFailed, what);
    };
    auto const& h = rho.quotient.quotient;
    for (element_id a = 0; a < s.size(); ++a) {
      for (element_id b = 0; b < s.size(); ++b) {
        if (rho.class_of(s.product(a, b))
            != h.product(rho.class_of(a), rho.class_of(b))) {
          fail("quotient map is not a morphism at (" + std::to_string(a) + ","
               + std::to_string(b) + ")");
        }
      }
    }
    if (s.size() <= 200) {
      for (element_id a = 0; a < s.size(); ++a) {
        for (element_id b = 0; b < s.size(); ++b) {
          if (!rho.related(a, b)) {
            continue;
          }
          for (element_id c = 0; c < s.size(); ++c) {
            if (!rho.related(s.product(a, c), s.product(b, c))
                || !rho.related(s.product(c, a), s.product(c, b))) {
              fail("compatibility fails at (" + std::to_string(a) + ","
                   + std::to_string(b) + "," + std::to_string(c) + ")");
            }
          }
        }
      }
    }
    std::vector<element_id> expected;
    for (std::size_t i = 0; i < s.i_count(); ++i) {
      for (element_id m : n.members) {
        for (std::size_t l = 0; l < s.lambda_count(); ++l) {
          expected.push_back(s.encode(RmsElement{i, m, l}));
        }
      }
    }
    std::sort(expected.begin(), expected.end());
    if (expected != rho.kernel_members) {
      fail("kernel differs from M[N; I, Lambda; P]");
    }
    if (!is_completely_simple(kernel_rms(rho).rms.as_semigroup("kernel"))) {
      fail("kernel is not completely simple");
    }
    return rho;
  }

  // One congruence per normal subgroup of G containing every sandwich entry,
  // ordered by member set.
  inline std::vector<GroupCongruence>
  enumerate_group_congruences(ReesMatrixSemigroup const& s) {
    if (!s.normalized()) {
      throw Error(ErrorCode::NotNormalized,
                  "congruence enumeration needs a normalized sandwich matrix");
    }
    std::vector<GroupCongruence> out;
    for (auto const& n : all_subgroups(s.group())) {
      if (!n.normal) {
        continue;
      }
      bool holds_entries = true;
      for (auto const& row : s.sandwich()) {
        for (element_id p : row) {
          holds_entries = holds_entries && n.contains(p);
        }
      }
      if (holds_entries) {
        out.push_back(congruence_from_normal(s, n));
      }
    }
    return out;
  }

}  // namespace csext

#endif  // CSEXT_REES_HPP_
