// Acceptance suite: runs every gate criterion at its stated budget and prints
// one PASS/FAIL line per criterion. Exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qaw/expr.hpp"
#include "qaw/verify.hpp"

using namespace qaw;

namespace {

struct Gate {
  int failures = 0;

  void run(int number, const std::string& title, double budget_ms,
           const std::function<bool(std::string*)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(&detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = budget_ms <= 0 || ms < budget_ms;
    if (!in_budget && detail.empty())
      detail = "over budget (" + std::to_string(ms) + " ms > " + std::to_string(budget_ms) + ")";
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", number,
                title.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
};

bool run_named(Verifier& v, std::string* detail, const std::string& name, Params params = {}) {
  CheckResult r = v.run_check(name, params);
  if (!r.passed) *detail = name + ": " + r.witness;
  return r.passed;
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  Verifier v;
  Gate gate;

  gate.run(1, "reduction rules reproduce the three defining relations", 100, [&](std::string* d) {
    Uaw u;
    RatFunc q = rf_q(), qi = rf_qinv();
    auto nfw = [](uint32_t i, uint32_t j, uint32_t k, uint32_t r, uint32_t s, uint32_t t) {
      return UawElement::term({i, j, k, r, s, t});
    };
    UawElement ba = nfw(1, 1, 0, 0, 0, 0) * (q * q) + nfw(0, 0, 1, 0, 0, 0) * (q.pow(3) - qi) -
                    nfw(0, 0, 0, 0, 0, 1) * (q * q - RatFunc(1));
    UawElement ca = nfw(1, 0, 1, 0, 0, 0) * (qi * qi) - nfw(0, 1, 0, 0, 0, 0) * (q - qi.pow(3)) +
                    nfw(0, 0, 0, 0, 1, 0) * (RatFunc(1) - qi * qi);
    UawElement cb = nfw(0, 1, 1, 0, 0, 0) * (q * q) + nfw(1, 0, 0, 0, 0, 0) * (q.pow(3) - qi) -
                    nfw(0, 0, 0, 1, 0, 0) * (q * q - RatFunc(1));
    bool ok = u.reduce_word("BA") == ba && u.reduce_word("CA") == ca && u.reduce_word("CB") == cb;
    if (!ok) *d = "normal forms differ from the stated relations";
    return ok;
  });

  gate.run(2, "six Casimir expressions reduce to one central degree-3 form", 1000,
           [&](std::string* d) { return run_named(v, d, "casimir_six_equal"); });

  gate.run(3, "confluence: 200 seeded words, two strategies", 30000, [&](std::string* d) {
    return run_named(v, d, "confluence", {{"count", 200}, {"maxlen", 8}});
  });

  gate.run(4, "Hall machinery: counts, rewrite inverse, theta negation", 30000,
           [&](std::string* d) {
             HallBasis hb(5);
             if (hb.first_of_length(5) != 33 || hb.first_of_length(6) != 81) {
               *d = "expected 32 elements up to length 4 and 80 up to length 5";
               return false;
             }
             return run_named(v, d, "hall_roundtrip", {{"count", 100}, {"maxdeg", 6}});
           });

  gate.run(5, "non-freeness: I0 certificate and Hall coordinates", 5000, [&](std::string* d) {
    return run_named(v, d, "free_I0_identity") && run_named(v, d, "I0_in_ideal") &&
           run_named(v, d, "I0_nonzero_hall");
  });

  gate.run(6, "the six length-4 identities and the H5b/H6a pair", 5000, [&](std::string* d) {
    return run_named(v, d, "delta_six_identities") && run_named(v, d, "seven_H5b_H6a");
  });

  gate.run(7, "the four length-5 relations", 10000,
           [&](std::string* d) { return run_named(v, d, "rel5_four_relations"); });

  gate.run(8, "ranks: 32 of 32, 76 of 80, 76 of the retained 76", 300000, [&](std::string* d) {
    return run_named(v, d, "L4_rank") && run_named(v, d, "L5_rank") &&
           run_named(v, d, "L5_basis");
  });

  gate.run(9, "elimination pivots factor into q and admissible cyclotomics", 0,
           [&](std::string* d) { return run_named(v, d, "pivot_factors"); });

  gate.run(10, "filtration propositions for 1 <= i,j,k <= 4", 120000, [&](std::string* d) {
    for (long i = 1; i <= 4; ++i)
      if (!run_named(v, d, "filtration_two_gen", {{"i", i}})) return false;
    for (long i = 1; i <= 4; ++i)
      for (long j = 1; j <= 4; ++j)
        for (long k = 1; k <= 4; ++k) {
          if (!run_named(v, d, "filtration_ad_abc", {{"i", i}, {"j", j}, {"k", k}})) return false;
          if (!run_named(v, d, "filtration_mixed", {{"i", i}, {"j", j}, {"k", k}})) return false;
        }
    for (long j = 1; j <= 4; ++j)
      for (long k = 1; k <= 4; ++k)
        if (!run_named(v, d, "L5_families", {{"j", j}, {"k", k}})) return false;
    return true;
  });

  gate.run(11, "PSL2(Z) action and the commutative quotient", 5000, [&](std::string* d) {
    return run_named(v, d, "psl2_action") && run_named(v, d, "psi_homomorphism");
  });

  gate.run(12, "mutation sensitivity: 9 of 9 perturbations detected", 0,
           [&](std::string* d) { return run_named(v, d, "mutation_sensitivity"); });

  gate.run(13, "CLI round trip and exit codes", 0, [&](std::string* d) {
    Uaw uaw;
    HallBasis basis(5);
    for (int i = 0; i < 200; ++i) {
      std::string text = sampling::random_expr_text(0xC11 + static_cast<uint64_t>(i), 3);
      ExprPtr once = parse_expr(text);
      ExprPtr twice = parse_expr(once->str());
      if (once->str() != twice->str()) {
        *d = "round trip unstable on: " + text;
        return false;
      }
      if (!(eval_delta(*once, uaw, basis) == eval_delta(*twice, uaw, basis))) {
        *d = "round trip changed the value of: " + text;
        return false;
      }
    }
    if (cli.empty()) {
      *d = "no --cli path given; exit-code contract not exercised";
      return false;
    }
    struct Case {
      const char* args;
      int expect;
    };
    const Case cases[] = {
        {"nf \"B*A\"", 0},
        {"hall --max-len 2", 0},
        {"hallcoords \"A*B - B*A\"", 0},
        {"hallcoords \"A*B + B*A\"", 1},  // NotInLie
        {"nf \"B*(A\"", 2},               // parse error
        {"bogus-subcommand", 2},          // usage error
        {"psi \"Om\"", 0},
    };
    for (const auto& c : cases) {
      int got = run_cli(cli, c.args);
      if (got != c.expect) {
        *d = std::string("exit code for `") + c.args + "`: got " + std::to_string(got) +
             ", want " + std::to_string(c.expect);
        return false;
      }
    }
    int full = run_cli(cli, "verify");
    if (full != 0) {
      *d = "full `verify` suite exited " + std::to_string(full);
      return false;
    }
    return true;
  });

  std::printf("%d of 13 criteria passed\n", 13 - gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
