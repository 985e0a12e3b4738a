// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
// Usage: acceptance <path-to-dicut-sketch> <work-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "dicut/harness.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string cli;
fs::path work;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::string fmt(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

Outcome lemma(const std::string& name, const std::function<std::string(const json&)>& describe) {
  const auto r = dicut::verify_lemma(name, {});
  return {r["pass"].get<bool>(), describe(r)};
}

bool layers_within(const json& run, std::string& why) {
  const auto& params = run["params"];
  if (params.is_null()) return true;
  const auto vcut = params["v_cutoff"].get<std::uint64_t>();
  const auto ecut = params["e_cutoff"].get<std::uint64_t>();
  for (const auto& layer : run["per_layer"]) {
    const auto v = layer["stored_vertices"].get<std::uint64_t>();
    const auto e = layer["stored_edges"].get<std::uint64_t>();
    if (v > vcut || e > vcut * (ecut + 1)) {
      why = "layer " + layer["a"].dump() + " stores " + std::to_string(v) + " vertices, " + std::to_string(e) + " edges";
      return false;
    }
  }
  return true;
}

Outcome space_accounting() {
  struct Case {
    std::string family;
    std::uint64_t n, m;
    std::string extra;
  };
  const std::vector<Case> cases = {
      {"erdos-renyi-directed", 2000, 8000, "--scale 1e-9"},
      {"planted-dicut", 1000, 6000, "--scale 1e-9"},
      {"power-law", 3000, 9000, "--scale 1e-9 --epsilon 0.5"},
      {"k-cycle-union", 600, 3000, "--scale 1e-10"},
      {"star", 400, 0, ""},
      {"erdos-renyi-directed", 12, 30, "--full-sampling --vcutoff 12 --ecutoff 1000"},
  };
  int runs = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const auto in = work / ("space_" + std::to_string(i) + ".txt");
    const auto out = work / ("space_" + std::to_string(i) + ".json");
    if (shell(cli + " generate --family " + c.family + " --n " + std::to_string(c.n) + " --m " + std::to_string(c.m) +
              " --graph-seed " + std::to_string(i + 1) + " --output " + quoted(in)) != 0)
      return {false, "generate failed for " + c.family};
    const int code = shell(cli + " run --input " + quoted(in) + " --seed 7 " + c.extra + " --output " + quoted(out) + " 2>/dev/null");
    if (code != 0) return {false, "run on " + c.family + " exited " + std::to_string(code)};
    std::string why;
    if (!layers_within(json::parse(slurp(out)), why)) return {false, c.family + ": " + why};
    ++runs;
  }

  // Dense stream: 60 vertices, all ordered pairs twice, vertex cutoff 8.
  const auto dense = work / "dense.txt";
  {
    std::ofstream s(dense);
    s << "n 60\n";
    for (int rep = 0; rep < 2; ++rep)
      for (int u = 1; u <= 60; ++u)
        for (int v = 1; v <= 60; ++v)
          if (u != v) s << u << ' ' << v << '\n';
  }
  const auto dense_out = work / "dense.json";
  const int code = shell(cli + " run --input " + quoted(dense) + " --seed 3 --vcutoff 8 --output " + quoted(dense_out) + " 2>/dev/null");
  if (code != 3) return {false, "dense stream exited " + std::to_string(code) + ", expected 3"};
  const auto j = json::parse(slurp(dense_out));
  std::string why;
  if (!layers_within(j, why)) return {false, "dense: " + why};
  if (!j["v_hat"].is_null() || j["overflow"].empty()) return {false, "dense run did not report overflow"};
  return {true, std::to_string(runs + 1) + " runs within bounds; dense stream overflowed in " + std::to_string(j["overflow"].size()) +
                    " layers with exit code 3"};
}

Outcome determinism() {
  const auto in = work / "det.txt";
  if (shell(cli + " generate --family planted-dicut --n 3000 --m 12000 --graph-seed 9 --ordering random-permutation --output " +
            quoted(in)) != 0)
    return {false, "generate failed"};
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "4"}) {
    const std::string env = std::string("DICUT_SKETCH_THREADS=") + threads + " ";
    const auto run_out = work / (std::string("det_run_") + threads + ".json");
    const auto cmp_out = work / (std::string("det_cmp_") + threads + ".csv");
    if (shell(env + cli + " run --input " + quoted(in) + " --seed 11 --scale 1e-9 --batch 500 --output " + quoted(run_out) +
              " 2>/dev/null") != 0)
      return {false, "run failed"};
    if (shell(env + cli + " compare --family erdos-renyi-directed --n 14 --m 60 --trials 6 --seed 2 --output " + quoted(cmp_out)) != 0)
      return {false, "compare failed"};
    outputs.push_back(slurp(run_out));
    outputs.push_back(slurp(cmp_out));
  }
  // Repeat the first configuration once more.
  const auto again = work / "det_run_again.json";
  if (shell("DICUT_SKETCH_THREADS=1 " + cli + " run --input " + quoted(in) + " --seed 11 --scale 1e-9 --batch 500 --output " +
            quoted(again) + " 2>/dev/null") != 0)
    return {false, "run failed"};
  if (outputs[0].empty() || outputs[1].empty()) return {false, "empty output"};
  if (outputs[0] != outputs[2]) return {false, "run JSON differs between 1 and 4 threads"};
  if (outputs[1] != outputs[3]) return {false, "compare CSV differs between 1 and 4 threads"};
  if (outputs[0] != slurp(again)) return {false, "run JSON differs on rerun"};
  return {true, "run JSON and 6-trial compare CSV byte-identical across reruns and thread counts"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <dicut-sketch> <work-dir>\n";
    return 2;
  }
  cli = "'" + std::string(argv[1]) + "'";
  work = argv[2];
  fs::create_directories(work);

  const std::vector<Criterion> criteria = {
      {1, "smoothing preserves total mass", 5,
       [] { return lemma("smoothing-sum", [](const json& r) { return "max drift " + r["max_drift"].dump(); }); }},
      {2, "projection commutes with smoothing", 10,
       [] { return lemma("projection", [](const json& r) { return "max diff " + r["max_abs_difference"].dump(); }); }},
      {3, "sandwich and window facts", 30,
       [] { return lemma("sandwich", [](const json& r) { return "window configs " + r["window_facts"]["configs"].dump(); }); }},
      {4, "sandwich gap scaling", 30,
       [] {
         return lemma("sandwich-gap", [](const json& r) {
           return "measured constant " + r["measured_constant"].dump() + " vs bound " + r["proof_constant"].dump();
         });
       }},
      {5, "oblivious correctness and continuity", 120,
       [] { return lemma("oblivious", [](const json& r) { return "monte carlo z " + r["monte_carlo"]["z"].dump(); }); }},
      {6, "blowup oracle", 120,
       [] { return lemma("blowup", [](const json& r) { return "largest blowup " + r["largest_blowup"].dump() + " vertices"; }); }},
      {7, "sparsification", 120,
       [] { return lemma("sparsification", [](const json& r) { return "passing trials " + r["passed_trials"].dump() + "/100"; }); }},
      {8, "degenerate end-to-end exactness", 60,
       [] { return lemma("degenerate", [](const json& r) { return "max smooth diff " + r["max_abs_a_hat_minus_smoothed"].dump(); }); }},
      {9, "pointwise estimate at desk scale", 600,
       [] {
         return lemma("pointwise", [](const json& r) {
           return "pass rate " + r["base"]["pass_rate"].dump() + ", median max violation " + r["base"]["median_max_violation"].dump() +
                  " -> " + r["doubled"]["median_max_violation"].dump();
         });
       }},
      {10, "hash family statistics", 120,
       [] {
         return lemma("hash", [](const json& r) {
           return "marginal p " + r["marginal"]["p_value"].dump() + ", joint p " + r["joint"]["p_value"].dump();
         });
       }},
      {11, "space accounting and overflow exit", 60, space_accounting},
      {12, "determinism", 60, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
