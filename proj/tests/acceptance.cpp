#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "bqdirac/verify.hpp"

using namespace bqdirac;

namespace {

struct Criterion {
  std::string name;
  std::vector<std::string> records;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"canonical basis exact, transformed bases within tolerance", {"basis.canonical", "basis.transformed"}},
      {"quaternion multiplication table exact", {"algebra.quaternion_table", "algebra.matrix_units"}},
      {"associativity and normed product", {"algebra.associativity", "algebra.normed"}},
      {"Jordan product laws", {"algebra.jordan"}},
      {"spinor/vector round trip and slot layout", {"triality.roundtrip", "triality.slot_layout"}},
      {"triality cycle of order 3 with stable signs",
       {"triality.ding_order3", "triality.cubic_preserved", "triality.sign_table"}},
      {"spinor and vector Lagrangians agree", {"dynamics.lagrangian"}},
      {"equivalent field equations on shell, counterexamples rejected",
       {"dynamics.dirac_map", "dynamics.real_form_map", "dynamics.on_shell.spinor", "dynamics.on_shell.vector",
        "dynamics.on_shell.selfdual", "dynamics.on_shell.real_form", "dynamics.on_shell.primed_form",
        "dynamics.counterexample.mass", "dynamics.counterexample.divergence"}},
      {"Bianchi identity and Chern-Simons total derivative", {"dynamics.bianchi", "dynamics.chern_simons"}},
      {"covariance, dot-preserving maps, Lorentz metric",
       {"transform.covariance", "transform.s_maps", "transform.s_maps_plus", "transform.lorentz_metric",
        "transform.closure"}},
      {"U(1) and chiral routes, De Moivre powers",
       {"transform.u1_route", "transform.u1_lagrangian", "transform.chiral_route", "transform.de_moivre"}},
      {"K identities, degenerate chirality, rest frame",
       {"mass.k_identities", "mass.split", "mass.degenerate", "mass.rest_frame", "mass.plane_wave_K"}},
      {"massless factorization and closed-loop phase",
       {"mass.operator_identity", "mass.modified_lagrangian", "mass.massless_factor", "mass.loop_phase",
        "mass.open_segment"}},
  };
  return list;
}

SuiteConfig config(int trials, std::uint64_t seed, int threads) {
  SuiteConfig c;
  c.suite = Suite::all;
  c.trials = trials;
  c.seed = seed;
  c.tol = 1e-10;
  c.threads = threads;
  return c;
}

bool report(int n, bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", n, name.c_str(), detail.c_str());
  return ok;
}

}  // namespace

int main() {
  const SuiteReport main_run = run_suite(config(1000, 1, 0));
  std::map<std::string, const Record*> by_id;
  for (const auto& r : main_run.records) by_id[r.id] = &r;

  int passed = 0;
  int n = 0;
  for (const auto& c : criteria()) {
    ++n;
    bool ok = true;
    double worst = 0;
    std::string missing;
    for (const auto& id : c.records) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        ok = false;
        missing += " " + id;
        continue;
      }
      ok = ok && it->second->pass;
      if (it->second->tol > 0 && it->second->id.find("counterexample") == std::string::npos)
        worst = std::max(worst, it->second->max_residual / it->second->tol);
      else if (it->second->tol == 0 && it->second->max_residual != 0)
        worst = std::max(worst, 1e300);
    }
    if (n == 6) {
      const auto table = main_run.observations.at("ding_sign_table").dump();
      const auto other = run_suite([] {
        auto c = config(50, 2, 0);
        c.suite = Suite::triality;
        return c;
      }());
      ok = ok && other.observations.at("ding_sign_table").dump() == table;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail, "%zu record%s, worst residual/tol %.3g%s", c.records.size(),
                  c.records.size() == 1 ? "" : "s", worst,
                  missing.empty() ? "" : ", missing:");
    passed += report(n, ok, c.name, detail + missing) ? 1 : 0;
  }

  ++n;
  const std::string a = to_json(run_suite(config(200, 7, 1)), false).dump();
  const std::string b = to_json(run_suite(config(200, 7, 1)), false).dump();
  const std::string c = to_json(run_suite(config(200, 7, 4)), false).dump();
  passed += report(n, a == b && a == c, "deterministic across runs and thread counts",
                   "seed 7, 200 trials, threads 1/1/4")
                ? 1
                : 0;

  const bool fast = main_run.wall_ms < 60000.0;
  std::printf("%d/%d criteria passed; 1000 trials in %.0f ms%s\n", passed, n, main_run.wall_ms,
              fast ? "" : " (over the 60 s budget)");
  return passed == n && fast ? 0 : 1;
}
