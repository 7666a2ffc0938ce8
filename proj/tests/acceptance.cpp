// Acceptance criteria AC-1 .. AC-10, one line each.  All tolerances are
// exact: every count must match and every violation count must be zero.
//
// usage: acceptance <path to csext binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "csext/catalog.hpp"
#include "csext/counterexample.hpp"
#include "csext/embeddings.hpp"
#include "oracles.hpp"

using namespace csext;

namespace {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run(std::string const& cmd) {
    Run   r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      return r;
    }
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) {
      r.out.append(buf, n);
    }
    int const st = pclose(pipe);
    r.status     = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  bool has_line(std::string const& text, std::string const& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
  }

  std::string cli;

  Outcome ac1() {
    auto const t0 = std::chrono::steady_clock::now();
    Run const  r  = run(cli + " verify counterexample");
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
    bool ok = r.status == 0 && secs < 60.0;
    for (char const* line : {"CERT nonembeddability", "IOTAS 588", "FRAMES 4096",
                             "ADMISSIBLE_H_FROM_FRAMES 0", "VERDICT PASS"}) {
      ok = ok && has_line(r.out, line);
    }
    ok = ok && r.out.size() >= 13
         && r.out.compare(r.out.size() - 13, 13, "VERDICT PASS\n") == 0;
    char secs_text[32];
    std::snprintf(secs_text, sizeof secs_text, "%.1f", secs);
    return {ok, "IOTAS=588 FRAMES=4096 ADMISSIBLE=0 VERDICT=PASS time<60s ("
                    + std::string(secs_text) + "s)"};
  }

  Outcome ac2() {
    auto       inst = build_order21_instance();
    auto const psi  = general_embedding_psi(inst.s, inst.n);
    std::size_t const classes = verify_maximal_subgroups(psi.target);
    bool ok = psi.check.morphism && psi.check.injective && inst.s.size() == 84
              && psi.target.product.size() == 12348 && classes == 12
              && psi.target.v.group().order() == 343;
    return {ok,
            "pairs=7056 violations=" + std::string(psi.check.morphism ? "0" : ">0")
                + " |VxH|=" + std::to_string(psi.target.product.size())
                + " maximal_subgroups=" + std::to_string(classes) + "x343"};
  }

  Outcome ac3() {
    auto z4  = build_z4_central_instance();
    auto nz  = central_embedding_nu(z4.s, z4.n);
    auto o21 = build_order21_instance();
    auto n21 = central_embedding_nu(o21.s, o21.n);
    bool ok  = nz.central && nz.check.morphism && nz.check.injective
              && !n21.central && !n21.check.morphism && n21.check.witness;
    std::string w = n21.check.witness
                        ? "(" + std::to_string(n21.check.witness->first) + ","
                              + std::to_string(n21.check.witness->second) + ")"
                        : "none";
    return {ok, "z4central embeds; order21 witness=" + w};
  }

  Outcome ac4() {
    bool        ok = true;
    std::string detail;
    for (auto const& p : kk_catalog()) {
      auto k = kk_embedding(p.g, p.n);
      bool good
          = k.check.morphism && k.check.injective && !find_cocycle_violation(p.g, k.cocycle);
      ok = ok && good;
      detail += p.name + (good ? "=ok " : "=FAIL ");
    }
    return {ok, detail + "cocycle_violations=0"};
  }

  Outcome ac5() {
    auto z4 = cyclic_group(4);
    auto g  = order21_group();
    bool a  = psi_equals_kappa_check(z4, subgroup_generated(z4, {2}));
    bool b  = psi_equals_kappa_check(g, subgroup_generated(g, {order21_encode(1, 1)}));
    return {a && b, std::string("z4=") + (a ? "true" : "false")
                        + " order21=" + (b ? "true" : "false")};
  }

  Outcome ac6() {
    std::size_t pairs = 0, mismatches = 0, products = 0;
    for (auto const& c : oracle::semidirect_corpus()) {
      auto t = oracle::semidirect_green_exhaustive(c.p);
      pairs += t.pairs;
      mismatches += t.mismatches;
      ++products;
    }
    auto            inst = build_order21_instance();
    ReesGreen const closed_t{&inst.w.copy};
    std::size_t     rel_r = 0, rel_l = 0;
    auto const      sampled = oracle::semidirect_green_sampled(
        inst.w.product, closed_t, 10'000, 2024, &rel_r, &rel_l);
    bool ok = mismatches == 0 && sampled.mismatches == 0 && sampled.pairs >= 10'000
              && inst.w.product.size() == 65856;
    return {ok,
            "exhaustive products=" + std::to_string(products) + " pairs="
                + std::to_string(pairs) + " mismatches=" + std::to_string(mismatches)
                + "; sampled |P|=65856 pairs=" + std::to_string(sampled.pairs)
                + " (R-related " + std::to_string(rel_r) + ", L-related "
                + std::to_string(rel_l) + ") mismatches="
                + std::to_string(sampled.mismatches)};
  }

  Outcome ac7() {
    auto        inst = build_order21_instance();
    auto const  all  = enumerate_group_congruences(inst.s);
    bool        ok   = all.size() == 2;
    std::size_t q = 0, k = 0;
    for (auto const& c : all) {
      if (c.normal_sub.members == inst.n.members) {
        q = c.quotient.quotient.order();
        k = c.kernel_members.size();
        ok = ok && is_completely_simple(kernel_rms(c).rms.as_semigroup("U"));
      }
    }
    ok = ok && q == 3 && k == 28;
    return {ok, "congruences=" + std::to_string(all.size()) + " quotient="
                    + std::to_string(q) + " kernel=" + std::to_string(k)
                    + " compatibility=exhaustive"};
  }

  Outcome ac8() {
    auto              inst = build_order21_instance();
    auto const&       w    = inst.w;
    std::size_t const m    = check_translated_sandwich(w);
    std::size_t       evals = 0, bad = 0;
    for (element_id xi = 0; xi < w.lambda_functions.size(); ++xi) {
      for (element_id eta = 0; eta < w.i_functions.size(); ++eta) {
        for (element_id a = 0; a < w.h.order(); ++a) {
          ++evals;
          bad += w.sandwich_value(xi, eta, a)
                         != w.base.sandwich(w.lambda_functions.value(xi, a),
                                            w.i_functions.value(eta, a))
                     ? 1
                     : 0;
        }
      }
    }
    return {m == 192 && bad == 0,
            "instances=" + std::to_string(m) + " entry_evaluations="
                + std::to_string(evals) + " violations=" + std::to_string(bad)};
  }

  Outcome ac9() {
    auto inst = build_order21_instance();
    auto a    = order3_census(inst);
    auto b    = order3_census(inst);
    bool ok   = a.count == 98 && b.count == 98 && a.closed_form_misses == 0
              && a.shape_violations == 0;
    return {ok, "order=1029 order3=" + std::to_string(a.count)
                    + " misses=" + std::to_string(a.closed_form_misses)};
  }

  Outcome ac10() {
    Run const a = run(cli + " verify all --jobs 1");
    Run const b = run(cli + " verify all --jobs 8");
    bool ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    return {ok, "bytes=" + std::to_string(a.out.size()) + " identical="
                    + (a.out == b.out ? "true" : "false")};
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <csext binary>\n";
    return 2;
  }
  cli = argv[1];
  std::vector<std::pair<char const*, std::function<Outcome()>>> criteria{
      {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3}, {"AC-4", ac4},
      {"AC-5", ac5}, {"AC-6", ac6}, {"AC-7", ac7}, {"AC-8", ac8},
      {"AC-9", ac9}, {"AC-10", ac10}};
  int failures = 0;
  for (auto const& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << id << (o.pass ? " PASS " : " FAIL ") << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
