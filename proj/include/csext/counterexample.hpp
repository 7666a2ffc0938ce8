// csext - extensions of completely simple semigroups by groups
//
// The order-21 extension that does not embed in the wreath product U wr H,
// and a mechanical certificate for that fact.
//
// G = Z7 x| {1, 2, 4} (multiplicative action), with (a, k) encoded as
// a + 7 idx(k), idx(1) = 0, idx(2) = 1, idx(4) = 2.  N = Z7 x {1},
// H = G/N identified with {1, 2, 4} by coset id = idx, and
// S = M[G; 2, 2; P] with p_22 = (1, 1) and every other entry the identity.
//
// Any embedding S -> U wr H has, in Rees coordinates, the shape
// (i, g, l) -> ((eta_i, f_g^{il}, ^(gN) xi_l), gN).  The certificate runs two
// independent enumerations whose outputs cannot meet:
//   * every injective morphism iota: G -> N^H x| H sends p_22 to (h, 1)
//     with h injective and identity-free;
//   * for every frame (eta_1, eta_2, xi_1, xi_2) the element
//     h = p^H_{xi1 eta1} (p^H_{xi2 eta1})^-1 p^H_{xi2 eta2} (p^H_{xi1 eta2})^-1
//     is never injective and identity-free.

#ifndef CSEXT_COUNTEREXAMPLE_HPP_
#define CSEXT_COUNTEREXAMPLE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "embeddings.hpp"
#include "error.hpp"
#include "group.hpp"
#include "products.hpp"
#include "rees.hpp"
#include "semigroup.hpp"

namespace csext {

  // (a, k) with a in Z7 and k in {1, 2, 4}.
  inline element_id order21_encode(element_id a, element_id k) {
    element_id idx = k == 1 ? 0 : k == 2 ? 1 : k == 4 ? 2 : 3;
    if (a >= 7 || idx == 3) {
      throw Error(ErrorCode::OutOfRange, "not an element of Z7 x| [2]");
    }
    return a + 7 * idx;
  }

  inline std::pair<element_id, element_id> order21_decode(element_id x) {
    constexpr element_id k[3] = {1, 2, 4};
    return {x % 7, k[x / 7]};
  }

  // (a, k)(b, m) = (a + k b, k m)
  inline FiniteGroup order21_group() {
    return FiniteGroup::from_product(21, [](element_id x, element_id y) {
      auto [a, k] = order21_decode(x);
      auto [b, m] = order21_decode(y);
      return order21_encode((a + k * b) % 7, (k * m) % 7);
    });
  }

  // A 2 x 2 normalized extension together with everything the certificate
  // machinery needs: the congruence, kernel U, the wreath copy of U wr H,
  // the group N^H x| H and a presentation of G.
  struct CounterInstance {
    std::string             name;
    FiniteGroup             g;
    Subgroup                n;
    ReesMatrixSemigroup     s;
    GroupCongruence         rho;
    KernelRms               u;
    WreathCopy              w;
    SemidirectProduct       nh_h;        // N^H x| H
    FiniteGroup             nh_h_group;  // the same, as a validated group
    std::vector<element_id> gens;
    std::string             gen_names;
    std::vector<std::string> relations;

    FiniteGroup const& h() const noexcept {
      return rho.quotient.quotient;
    }
    element_id p22() const {
      return s.sandwich(1, 1);
    }
  };

  inline CounterInstance make_instance(std::string              name,
                                       FiniteGroup              g,
                                       Subgroup                 n,
                                       element_id               p22,
                                       std::vector<element_id>  gens,
                                       std::string              gen_names,
                                       std::vector<std::string> relations) {
    ReesMatrixSemigroup s(g, 2, 2, {{0, 0}, {0, p22}});
    GroupCongruence     rho  = congruence_from_normal(s, n);
    KernelRms           u    = kernel_rms(rho);
    WreathCopy          w    = rees_wreath_copy(u.rms, rho.quotient.quotient);
    SemidirectProduct   nh_h = wreath_product(
        FiniteSemigroup::from_group(u.n.group, "N"), rho.quotient.quotient);
    FiniteGroup nh_h_group = nh_h.as_group();
    return CounterInstance{std::move(name),
                           std::move(g),
                           std::move(n),
                           std::move(s),
                           std::move(rho),
                           std::move(u),
                           std::move(w),
                           std::move(nh_h),
                           std::move(nh_h_group),
                           std::move(gens),
                           std::move(gen_names),
                           std::move(relations)};
  }

  // x = p_22 = (1, 1), y = (0, 2); G = <x, y | x^7, y^3, y x y^-1 x^-2>.
  inline CounterInstance build_order21_instance() {
    FiniteGroup g = order21_group();
    Subgroup    n = subgroup_generated(g, {order21_encode(1, 1)});
    auto        inst
        = make_instance("order21",
                        g,
                        n,
                        order21_encode(1, 1),
                        {order21_encode(1, 1), order21_encode(0, 2)},
                        "xy",
                        {"xxxxxxx", "yyy", "yxYXX"});
    auto fail = [](std::string const& what) {
      throw Error(ErrorCode::VerificationFailed, "order-21 instance: " + what);
    };
    if (inst.g.order() != 21 || inst.n.size() != 7 || !inst.n.normal) {
      fail("G or N has the wrong shape");
    }
    if (inst.s.size() != 84 || is_central_rms(inst.s)) {
      fail("S must have 84 elements and be non-central");
    }
    if (inst.h().order() != 3 || inst.nh_h.size() != 1029
        || inst.w.product.size() != 65856) {
      fail("H, N^H x| H or U wr H has the wrong order");
    }
    return inst;
  }

  // Z4 with N = {0, 2} and p_22 = 2: a central instance.
  inline CounterInstance build_z4_central_instance() {
    FiniteGroup g = cyclic_group(4);
    return make_instance(
        "z4central", g, subgroup_generated(g, {2}), 2, {1}, "x", {"xxxx"});
  }

  ////////////////////////////////////////////////////////////////////////
  // Order-3 census in N^H x| H
  ////////////////////////////////////////////////////////////////////////

  struct Order3Census {
    std::size_t count              = 0;  // elements of order exactly 3
    std::size_t shape_violations   = 0;  // order 3 but second coordinate 1
    std::size_t closed_form_misses = 0;  // disagreements with the test below
  };

  // For H of order 3: (t, A) with A != 1 has order 3 iff the product of the
  // values of t, in H order, is the identity of N.
  inline Order3Census order3_census(CounterInstance const& inst) {
    auto const&         p  = inst.nh_h_group;
    auto const&         n  = inst.u.n.group;
    FunctionSpace const fs(n.order(), inst.h().order());
    auto const          orders = centre_and_orders(p).order_of;
    Order3Census        out;
    for (element_id x = 0; x < p.order(); ++x) {
      auto const [t, a] = inst.nh_h.decode(x);
      bool const is3    = orders[x] == 3;
      element_id prod   = 0;
      for (element_id b = 0; b < fs.length(); ++b) {
        prod = n.product(prod, fs.value(t, b));
      }
      bool const predicted = a != 0 && prod == 0;
      out.count += is3 ? 1 : 0;
      out.shape_violations += (is3 && a == 0) ? 1 : 0;
      out.closed_form_misses += (is3 != predicted) ? 1 : 0;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Injective iota enumeration
  ////////////////////////////////////////////////////////////////////////

  // h: H -> N injective with the identity outside its image.
  inline bool admissible_h(FunctionSpace const& fs, element_id h) {
    auto v = fs.decode(h);
    return std::find(v.begin(), v.end(), 0) == v.end() && !has_repeats(v);
  }

  struct IotaRecord {
    std::vector<element_id> image;
    element_id              h     = 0;
    int                     which = 0;  // 1 or 2: the Case of iota(y)
  };

  struct IotaReport {
    std::vector<IotaRecord> iotas;
    std::size_t             case1 = 0;
    std::size_t             case2 = 0;
  };

  // Every injective morphism G -> N^H x| H from the instance presentation,
  // with the Case 1 / Case 2 relation of h checked for each.  Throws
  // PresentationMismatch if the relations fail in G itself and
  // ContradictionNotEstablished if any postcondition fails.
  inline IotaReport enumerate_injective_iotas(CounterInstance const& inst,
                                              std::size_t            jobs = 1) {
    std::vector<Word> rels;
    for (auto const& r : inst.relations) {
      rels.push_back(parse_word(r, inst.gen_names));
    }
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (evaluate_word(inst.g, rels[k], inst.gens) != 0) {
        throw Error(ErrorCode::PresentationMismatch,
                    "relation " + inst.relations[k] + " fails in G");
      }
    }
    auto morphisms = enumerate_group_morphisms(inst.g,
                                               inst.gens,
                                               rels,
                                               inst.nh_h_group,
                                               true,
                                               inst.g.order(),
                                               jobs);
    auto const&         n  = inst.u.n.group;
    auto const&         h  = inst.h();
    FunctionSpace const fs(n.order(), h.order());
    auto fail = [](std::string const& what) {
      throw Error(ErrorCode::ContradictionNotEstablished, what);
    };
    IotaReport out;
    for (auto& m : morphisms) {
      if (!is_group_morphism(inst.g, inst.nh_h_group, m.image)) {
        fail("enumerated map is not a morphism");
      }
      auto const [hx, ax] = inst.nh_h.decode(m.image[inst.p22()]);
      if (ax != 0) {
        fail("iota(p22) leaves the base group");
      }
      IotaRecord rec{m.image, hx, 0};
      if (inst.name == "order21") {
        auto const [ty, ay] = inst.nh_h.decode(m.image[inst.gens[1]]);
        auto       v        = fs.decode(hx);
        if (ay == 1) {
          // ^2 h = h^2
          if (inst.u.n.group.power(v[0], 2) != v[1]
              || inst.u.n.group.power(v[1], 2) != v[2]
              || inst.u.n.group.power(v[2], 2) != v[0]) {
            fail("Case 1 relation fails");
          }
          rec.which = 1;
          ++out.case1;
        } else if (ay == 2) {
          // 2h = (1h)^4, 4h = (1h)^2
          if (n.power(v[0], 4) != v[1] || n.power(v[0], 2) != v[2]) {
            fail("Case 2 relation fails");
          }
          rec.which = 2;
          ++out.case2;
        } else {
          fail("iota(y) has trivial H-component");
        }
        if (!admissible_h(fs, hx)) {
          fail("h from an injective iota is not injective and identity-free");
        }
      }
      out.iotas.push_back(std::move(rec));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sandwich scan over all frames
  ////////////////////////////////////////////////////////////////////////

  struct ScanReport {
    std::size_t          frames            = 0;
    std::size_t          entry_violations  = 0;  // value not in {1, p22}
    std::size_t          pigeon_violations = 0;  // row/column condition
    std::size_t          degenerate_points = 0;  // all four entries p22
    std::size_t          range_violations  = 0;  // ah not in {1, p22, p22^-1}
    std::size_t          route_mismatches  = 0;  // two evaluations of h differ
    std::size_t          admissible        = 0;
    std::set<element_id> h_values;
  };

  inline ScanReport sandwich_scan(CounterInstance const& inst) {
    auto const&         w     = inst.w;
    auto const&         n     = inst.u.n.group;
    auto const&         power = w.power_group;
    element_id const    p     = inst.u.n.from_parent(inst.p22());
    FunctionSpace const fs(n.order(), inst.h().order());
    ScanReport          out;
    auto const          ni = w.i_functions.size();
    auto const          nl = w.lambda_functions.size();
    for (element_id eta1 = 0; eta1 < ni; ++eta1) {
      for (element_id eta2 = 0; eta2 < ni; ++eta2) {
        for (element_id xi1 = 0; xi1 < nl; ++xi1) {
          for (element_id xi2 = 0; xi2 < nl; ++xi2) {
            ++out.frames;
            // entries in the order (xi1,eta1), (xi2,eta1), (xi2,eta2), (xi1,eta2)
            element_id const e[4] = {w.copy.sandwich(xi1, eta1),
                                     w.copy.sandwich(xi2, eta1),
                                     w.copy.sandwich(xi2, eta2),
                                     w.copy.sandwich(xi1, eta2)};
            std::vector<element_id> hv(fs.length());
            for (element_id a = 0; a < fs.length(); ++a) {
              element_id v[4];
              int        ones = 0;
              for (int k = 0; k < 4; ++k) {
                v[k] = fs.value(e[k], a);
                if (v[k] != 0 && v[k] != p) {
                  ++out.entry_violations;
                }
                ones += v[k] == 0 ? 1 : 0;
              }
              hv[a] = n.product(n.product(n.product(v[0], n.inverse(v[1])), v[2]),
                                n.inverse(v[3]));
              // Where ah is not the identity, at least two entries are the
              // identity and exactly two must share a row (xi) or a column
              // (eta); the diagonal pairs {0, 2} and {1, 3} do not.
              if (ones == 0) {
                ++out.degenerate_points;
              }
              if (hv[a] != 0
                  && (ones < 2
                      || (ones == 2
                          && ((v[0] == 0 && v[2] == 0)
                              || (v[1] == 0 && v[3] == 0))))) {
                ++out.pigeon_violations;
              }
              if (hv[a] != 0 && hv[a] != p && hv[a] != n.inverse(p)) {
                ++out.range_violations;
              }
            }
            element_id const h = fs.encode(hv);
            // f_{p22}^{11} = f_1^{12} p^H_{xi2 eta2} f_1^{21} with
            // f_1^{12} = (p^H_{xi2 eta1})^-1 and f_1^{21} = (p^H_{xi1 eta2})^-1.
            element_id const f11 = power.product(
                power.product(power.inverse(e[1]), e[2]), power.inverse(e[3]));
            if (power.product(e[0], f11) != h) {
              ++out.route_mismatches;
            }
            if (admissible_h(fs, h)) {
              ++out.admissible;
            }
            out.h_values.insert(h);
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdict
  ////////////////////////////////////////////////////////////////////////

  enum class Verdict { Pass, NotApplicablePositive };

  struct Certificate {
    Verdict     verdict            = Verdict::Pass;
    std::size_t iotas              = 0;
    std::size_t frames             = 0;
    std::size_t admissible_frames  = 0;
    std::size_t shared_h           = 0;
    std::optional<std::pair<element_id, element_id>> nu_witness;

    std::string text() const {
      if (verdict == Verdict::NotApplicablePositive) {
        return "CERT nonembeddability\nVERDICT NOT_APPLICABLE_POSITIVE\n";
      }
      return "CERT nonembeddability\nIOTAS " + std::to_string(iotas)
             + "\nFRAMES " + std::to_string(frames)
             + "\nADMISSIBLE_H_FROM_FRAMES " + std::to_string(admissible_frames)
             + "\nVERDICT PASS\n";
    }
  };

  // A central instance embeds via nu and is reported as such.  Otherwise
  // both enumerations must meet their postconditions and the h values they
  // produce must be disjoint; anything else is ContradictionNotEstablished.
  inline Certificate nonembeddability_verdict(CounterInstance const& inst,
                                              std::size_t            jobs = 1) {
    Certificate cert;
    if (is_central_rms(inst.s)) {
      auto nu = central_embedding_nu(inst.s, inst.n, jobs);
      if (nu.check.morphism && nu.check.injective) {
        cert.verdict = Verdict::NotApplicablePositive;
        return cert;
      }
      throw Error(ErrorCode::ContradictionNotEstablished,
                  "central instance but nu fails");
    }
    auto fail = [](std::string const& what) {
      throw Error(ErrorCode::ContradictionNotEstablished, what);
    };
    IotaReport const iotas = enumerate_injective_iotas(inst, jobs);
    ScanReport const scan  = sandwich_scan(inst);
    if (scan.entry_violations || scan.pigeon_violations || scan.range_violations
        || scan.route_mismatches) {
      fail("sandwich scan postconditions fail");
    }
    FunctionSpace const fs(inst.u.n.group.order(), inst.h().order());
    for (auto const& r : iotas.iotas) {
      if (!admissible_h(fs, r.h)) {
        fail("an injective iota gives an inadmissible h");
      }
      if (scan.h_values.count(r.h)) {
        ++cert.shared_h;
      }
    }
    if (scan.admissible != 0 || cert.shared_h != 0) {
      fail("frames produce an admissible h");
    }
    cert.verdict           = Verdict::Pass;
    cert.iotas             = iotas.iotas.size();
    cert.frames            = scan.frames;
    cert.admissible_frames = scan.admissible;
    return cert;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equations (A)-(E) on candidate embedding data
  ////////////////////////////////////////////////////////////////////////

  // Rees-coordinate data of a would-be embedding S -> U wr H, i.e.
  // (i, g, l) -> ((eta[i], f[x], xi[gN][l]), gN) for x = (i, g, l).
  struct EmbeddingCandidate {
    enum class Target { WreathCopy, GeneralTarget };

    Target                               target = Target::WreathCopy;
    ReesMatrixSemigroup                  s;
    QuotientData                         quotient;
    std::optional<WreathCopy>            w;
    std::vector<element_id>              eta;  // per i, code in I^H
    std::vector<std::vector<element_id>> xi;   // [coset][l], code in Lambda^H
    std::vector<element_id>              f;    // per element of S, code in N^H
  };

  inline EmbeddingCandidate candidate_from_nu(ReesMatrixSemigroup const& s,
                                              NuEmbedding const&         nu) {
    EmbeddingCandidate c{EmbeddingCandidate::Target::WreathCopy,
                         s,
                         nu.cocycle.quotient,
                         nu.wreath,
                         {},
                         {},
                         {}};
    for (std::size_t i = 0; i < s.i_count(); ++i) {
      c.eta.push_back(nu.wreath.i_functions.constant(static_cast<element_id>(i)));
    }
    for (element_id a = 0; a < nu.cocycle.h().order(); ++a) {
      c.xi.emplace_back();
      for (std::size_t l = 0; l < s.lambda_count(); ++l) {
        c.xi.back().push_back(
            nu.wreath.lambda_functions.constant(static_cast<element_id>(l)));
      }
    }
    for (element_id x = 0; x < s.size(); ++x) {
      c.f.push_back(nu.cocycle.f[s.decode(x).g]);
    }
    return c;
  }

  inline EmbeddingCandidate candidate_from_psi(ReesMatrixSemigroup const& s,
                                               PsiEmbedding const&        psi) {
    return EmbeddingCandidate{EmbeddingCandidate::Target::GeneralTarget,
                              s,
                              psi.target.cocycle.quotient,
                              std::nullopt,
                              {},
                              {},
                              {}};
  }

  struct ConstraintVerdict {
    enum class Status { Pass, Fail, NotApplicable };

    Status      status = Status::Pass;
    std::string equation;  // first failing equation: "A" ... "E"
    std::string witness;
    bool        morphism = false;  // induced map verified a morphism
  };

  inline ConstraintVerdict
  structured_constraint_check(EmbeddingCandidate const& c,
                              std::size_t               jobs = 1) {
    ConstraintVerdict out;
    if (c.target != EmbeddingCandidate::Target::WreathCopy || !c.w) {
      out.status = ConstraintVerdict::Status::NotApplicable;
      return out;
    }
    auto const& s     = c.s;
    auto const& g     = s.group();
    auto const& w     = *c.w;
    auto const& power = w.power_group;
    auto const& h     = c.quotient.quotient;
    auto const& coset = c.quotient.coset_of;
    if (c.eta.size() != s.i_count() || c.xi.size() != h.order()
        || c.f.size() != s.size()) {
      throw Error(ErrorCode::OutOfRange, "candidate data has the wrong shape");
    }
    auto f = [&](std::size_t i, element_id x, std::size_t l) {
      return c.f[s.encode(RmsElement{i, x, l})];
    };
    auto mul = [&](element_id a, element_id b) { return power.product(a, b); };
    auto act = [&](element_id a, element_id code) {
      return w.translate_group(code, a);
    };
    auto ph = [&](element_id xi, element_id eta) {
      return w.copy.sandwich(xi, eta);
    };
    auto report = [&](char const* eq, std::string wit) {
      if (out.status == ConstraintVerdict::Status::Pass) {
        out.status   = ConstraintVerdict::Status::Fail;
        out.equation = eq;
        out.witness  = std::move(wit);
      }
    };
    std::size_t const ni = s.i_count();
    std::size_t const nl = s.lambda_count();
    // (B)  ^(gN) xi_{hN, m} = xi_{ghN, m}
    for (element_id a = 0; a < h.order(); ++a) {
      for (element_id b = 0; b < h.order(); ++b) {
        for (std::size_t m = 0; m < nl; ++m) {
          if (w.translate_lambda(c.xi[b][m], a) != c.xi[h.product(a, b)][m]) {
            report("B",
                   "A=" + std::to_string(a) + " B=" + std::to_string(b)
                       + " m=" + std::to_string(m));
          }
        }
      }
    }
    // (C) and (A)
    for (std::size_t i = 0; i < ni && out.status == ConstraintVerdict::Status::Pass; ++i) {
      for (std::size_t j = 0; j < ni; ++j) {
        for (std::size_t l = 0; l < nl; ++l) {
          for (std::size_t m = 0; m < nl; ++m) {
            for (element_id x = 0; x < g.order(); ++x) {
              element_id const a = coset[x];
              for (element_id y = 0; y < g.order(); ++y) {
                element_id const prod
                    = g.product(g.product(x, s.sandwich(l, j)), y);
                element_id const lhs = f(i, prod, m);
                element_id const rc  = mul(
                    mul(f(i, x, l), act(a, ph(c.xi[0][l], c.eta[j]))),
                    act(a, f(j, y, m)));
                std::string const at
                    = "i=" + std::to_string(i) + " j=" + std::to_string(j)
                      + " l=" + std::to_string(l) + " m=" + std::to_string(m)
                      + " g=" + std::to_string(x) + " h=" + std::to_string(y);
                if (lhs != rc) {
                  report("C", at);
                }
                element_id const ra = mul(
                    mul(f(i, x, l), ph(c.xi[a][l], w.translate_i(c.eta[j], a))),
                    act(a, f(j, y, m)));
                if (lhs != ra) {
                  report("A", at);
                }
              }
            }
          }
        }
      }
    }
    // (D) f^{im}_{p_lj} = f_1^{il} p^H_{xi_l eta_j} f_1^{jm}
    // (E) f^{il}_{p_li^-1} = (p^H_{xi_l eta_i})^-1
    for (std::size_t i = 0; i < ni; ++i) {
      for (std::size_t l = 0; l < nl; ++l) {
        for (std::size_t j = 0; j < ni; ++j) {
          for (std::size_t m = 0; m < nl; ++m) {
            element_id rhs
                = mul(mul(f(i, 0, l), ph(c.xi[0][l], c.eta[j])), f(j, 0, m));
            if (f(i, s.sandwich(l, j), m) != rhs) {
              report("D",
                     "i=" + std::to_string(i) + " l=" + std::to_string(l)
                         + " j=" + std::to_string(j) + " m=" + std::to_string(m));
            }
          }
        }
        if (f(i, g.inverse(s.sandwich(l, i)), l)
            != power.inverse(ph(c.xi[0][l], c.eta[i]))) {
          report("E", "i=" + std::to_string(i) + " l=" + std::to_string(l));
        }
      }
    }
    std::vector<element_id> map(s.size());
    for (element_id x = 0; x < s.size(); ++x) {
      auto const       e = s.decode(x);
      element_id const a = coset[e.g];
      map[x]             = w.product.encode(
          w.copy.encode(RmsElement{c.eta[e.i], c.f[x], c.xi[a][e.lambda]}), a);
    }
    auto check = is_semigroup_morphism(
        map, s.as_semigroup("S"), w.product.as_semigroup("U wr H"), jobs);
    out.morphism = check.morphism;
    if (out.status == ConstraintVerdict::Status::Pass && !out.morphism) {
      throw Error(ErrorCode::VerificationFailed,
                  "equations hold but the induced map is not a morphism");
    }
    return out;
  }

}  // namespace csext

#endif  // CSEXT_COUNTEREXAMPLE_HPP_
