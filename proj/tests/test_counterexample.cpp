#include <array>
#include <set>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "csext/counterexample.hpp"

using namespace csext;

namespace {

  // Z7^3 x| {1, 2, 4} by raw arithmetic.  H ids 0, 1, 2 stand for 1, 2, 4,
  // t is a triple indexed by H ids and (^A t)(B) = t(BA).
  struct Raw {
    std::array<int, 3> t;
    int                a;
  };

  int hmul(int a, int b) {
    int const k[3] = {1, 2, 4};
    int const p    = k[a] * k[b] % 7;
    return p == 1 ? 0 : p == 2 ? 1 : 2;
  }

  Raw raw_decode(element_id x) {
    int code = static_cast<int>(x / 3);
    return Raw{{code / 49, code / 7 % 7, code % 7}, static_cast<int>(x % 3)};
  }

  element_id raw_encode(Raw const& r) {
    return static_cast<element_id>((r.t[0] * 49 + r.t[1] * 7 + r.t[2]) * 3 + r.a);
  }

  element_id raw_product(element_id x, element_id y) {
    Raw p = raw_decode(x), q = raw_decode(y), out{};
    for (int b = 0; b < 3; ++b) {
      out.t[b] = (p.t[b] + q.t[hmul(b, p.a)]) % 7;
    }
    out.a = hmul(p.a, q.a);
    return raw_encode(out);
  }

  element_id raw_power(element_id x, int k) {
    element_id r = 0;
    for (int i = 0; i < k; ++i) {
      r = raw_product(r, x);
    }
    return r;
  }

  element_id raw_inverse(element_id x) {
    for (element_id y = 0; y < 1029; ++y) {
      if (raw_product(x, y) == 0) {
        return y;
      }
    }
    return 0;
  }

  std::size_t raw_closure_size(element_id x, element_id y) {
    std::set<element_id>    seen{0};
    std::vector<element_id> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (element_id g : {x, y}) {
        element_id z = raw_product(queue[k], g);
        if (seen.insert(z).second) {
          queue.push_back(z);
        }
      }
    }
    return seen.size();
  }

}  // namespace

TEST_CASE("instance shape", "[counterexample]") {
  auto inst = build_order21_instance();
  CHECK(inst.g.order() == 21);
  CHECK(inst.s.size() == 84);
  CHECK(inst.p22() == order21_encode(1, 1));
  CHECK(inst.h().order() == 3);
  CHECK(inst.u.rms.size() == 28);
  CHECK(inst.w.copy.size() == 8u * 8u * 343u);
  CHECK(inst.w.product.size() == 65856);
  CHECK_FALSE(is_central_rms(inst.s));
  // H ids follow the second coordinate: (0, 2) lies in coset 1
  CHECK(inst.rho.quotient.coset_of[order21_encode(0, 2)] == 1);
  CHECK(inst.rho.quotient.coset_of[order21_encode(3, 4)] == 2);
}

TEST_CASE("N^H x| H agrees with raw arithmetic", "[counterexample]") {
  auto inst = build_order21_instance();
  REQUIRE(inst.nh_h_group.order() == 1029);
  for (element_id x = 0; x < 1029; ++x) {
    for (element_id y = 0; y < 1029; ++y) {
      REQUIRE(inst.nh_h_group.product(x, y) == raw_product(x, y));
    }
  }
}

TEST_CASE("order-3 census", "[counterexample]") {
  auto inst   = build_order21_instance();
  auto census = order3_census(inst);
  std::size_t brute = 0;
  for (element_id x = 1; x < 1029; ++x) {
    brute += raw_power(x, 3) == 0 ? 1 : 0;
  }
  CHECK(brute == 98);
  CHECK(census.count == brute);
  CHECK(census.shape_violations == 0);
  CHECK(census.closed_form_misses == 0);
}

TEST_CASE("injective iotas match a pair scan", "[counterexample]") {
  auto inst = build_order21_instance();
  // x^7 = y^3 = 1, y x y^-1 = x^2, and <x, y> of order 21
  std::size_t brute = 0;
  std::vector<element_id> order7, order3;
  for (element_id z = 0; z < 1029; ++z) {
    if (raw_power(z, 7) == 0) {
      order7.push_back(z);
    }
    if (raw_power(z, 3) == 0) {
      order3.push_back(z);
    }
  }
  for (element_id x : order7) {
    for (element_id y : order3) {
      element_id lhs = raw_product(raw_product(y, x), raw_inverse(y));
      if (lhs == raw_product(x, x) && raw_closure_size(x, y) == 21) {
        ++brute;
      }
    }
  }
  auto report = enumerate_injective_iotas(inst);
  CHECK(report.iotas.size() == brute);
  CHECK(brute == 588);
  CHECK(report.case1 + report.case2 == report.iotas.size());
  CHECK(report.case1 > 0);
  CHECK(report.case2 > 0);

  FunctionSpace fs(7, 3);
  for (auto const& r : report.iotas) {
    REQUIRE(admissible_h(fs, r.h));
    REQUIRE(is_group_morphism(inst.g, inst.nh_h_group, r.image));
    REQUIRE_FALSE(has_repeats(r.image));
  }

  auto again = enumerate_injective_iotas(inst, 4);
  REQUIRE(again.iotas.size() == report.iotas.size());
  for (std::size_t k = 0; k < again.iotas.size(); ++k) {
    REQUIRE(again.iotas[k].image == report.iotas[k].image);
  }
}

TEST_CASE("presentation mismatch is reported", "[counterexample]") {
  auto inst      = build_order21_instance();
  inst.relations = {"xxxxxxx", "yy"};
  CHECK_THROWS_AS(enumerate_injective_iotas(inst), Error);
}

TEST_CASE("sandwich scan", "[counterexample]") {
  auto inst = build_order21_instance();
  auto scan = sandwich_scan(inst);
  CHECK(scan.frames == 4096);
  CHECK(scan.entry_violations == 0);
  CHECK(scan.pigeon_violations == 0);
  CHECK(scan.range_violations == 0);
  CHECK(scan.route_mismatches == 0);
  CHECK(scan.admissible == 0);
  // all four entries equal p22 at a exactly when xi_1, xi_2, eta_1, eta_2
  // all take the second index there: 4^4 frames per point
  CHECK(scan.degenerate_points == 3u * 256u);

  // constant frames telescope to the identity
  auto const& w = inst.w;
  auto const& p = w.power_group;
  for (element_id eta = 0; eta < 8; ++eta) {
    for (element_id xi = 0; xi < 8; ++xi) {
      element_id e = w.copy.sandwich(xi, eta);
      element_id h = p.product(p.product(p.product(e, p.inverse(e)), e),
                               p.inverse(e));
      REQUIRE(h == 0);
      REQUIRE(scan.h_values.count(h));
    }
  }
  FunctionSpace fs(7, 3);
  for (element_id h : scan.h_values) {
    REQUIRE_FALSE(admissible_h(fs, h));
  }
}

TEST_CASE("nonembeddability verdict", "[counterexample]") {
  auto inst = build_order21_instance();
  auto cert = nonembeddability_verdict(inst);
  CHECK(cert.verdict == Verdict::Pass);
  CHECK(cert.frames == 4096);
  CHECK(cert.admissible_frames == 0);
  CHECK(cert.iotas == 588);
  CHECK(cert.text()
        == "CERT nonembeddability\nIOTAS 588\nFRAMES 4096\n"
           "ADMISSIBLE_H_FROM_FRAMES 0\nVERDICT PASS\n");

  auto z4 = build_z4_central_instance();
  CHECK(nonembeddability_verdict(z4).verdict == Verdict::NotApplicablePositive);

  auto tampered = make_instance(
      "tampered", inst.g, inst.n, 0, inst.gens, inst.gen_names, inst.relations);
  CHECK(nonembeddability_verdict(tampered).verdict
        == Verdict::NotApplicablePositive);
}

TEST_CASE("structured constraints", "[counterexample]") {
  auto z4 = build_z4_central_instance();
  auto nu = central_embedding_nu(z4.s, z4.n);
  auto c  = candidate_from_nu(z4.s, nu);
  auto ok = structured_constraint_check(c);
  CHECK(ok.status == ConstraintVerdict::Status::Pass);
  CHECK(ok.morphism);

  // perturb f at (0, 1, 0)
  auto bad = c;
  auto x   = z4.s.encode({0, 1, 0});
  bad.f[x] = nu.wreath.power_group.product(
      bad.f[x], nu.wreath.group_functions.encode({1, 0}));
  auto v = structured_constraint_check(bad);
  CHECK(v.status == ConstraintVerdict::Status::Fail);
  CHECK(v.equation == "C");
  CHECK_FALSE(v.witness.empty());
  CHECK_FALSE(v.morphism);

  // xi not equivariant
  auto skew     = c;
  skew.xi[1][0] = nu.wreath.lambda_functions.encode({1, 0});
  auto sv       = structured_constraint_check(skew);
  CHECK(sv.status == ConstraintVerdict::Status::Fail);
  CHECK(sv.equation == "B");

  auto o21 = build_order21_instance();
  auto nu21 = central_embedding_nu(o21.s, o21.n);
  auto v21 = structured_constraint_check(candidate_from_nu(o21.s, nu21));
  CHECK(v21.status == ConstraintVerdict::Status::Fail);
  CHECK_FALSE(v21.morphism);

  auto psi = general_embedding_psi(z4.s, z4.n);
  CHECK(structured_constraint_check(candidate_from_psi(z4.s, psi)).status
        == ConstraintVerdict::Status::NotApplicable);
}

TEST_CASE("constraints hold for every central nu", "[counterexample][property]") {
  auto const z6 = cyclic_group(6);
  for (auto const& n : all_subgroups(z6)) {
    for (element_id p : n.members) {
      auto s  = ReesMatrixSemigroup(z6, 2, 2, {{0, 0}, {0, p}});
      auto nu = central_embedding_nu(s, n);
      auto v  = structured_constraint_check(candidate_from_nu(s, nu));
      REQUIRE(v.status == ConstraintVerdict::Status::Pass);
      REQUIRE(v.morphism);
    }
  }
}
