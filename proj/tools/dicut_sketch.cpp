// dicut-sketch: generate streams, run the estimator, verify properties, compare.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicut/error.hpp"
#include "dicut/harness.hpp"
#include "dicut/sketcher.hpp"
#include "dicut/stream.hpp"

namespace {

constexpr int kExitOverflow = 3;
constexpr int kExitError = 2;

struct RunFlags {
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::string oblivious_config;
  std::optional<double> slack;
  double mbound_exp = 2.0;
  double c_spar = dicut::kDefaultCSpar;
  std::optional<std::uint64_t> v_cutoff;
  std::optional<std::uint64_t> e_cutoff;
  bool full_sampling = false;
  std::size_t batch = 4096;

  void attach(CLI::App* app) {
    app->add_option("--epsilon", epsilon, "accuracy parameter in (0, 1)");
    app->add_option("--seed", seed, "sketch seed");
    app->add_option("--scale", scale, "multiplier on rho (1 = unscaled constants)");
    app->add_option("--oblivious-config", oblivious_config, "JSON oblivious algorithm (default stand-in if omitted)");
    app->add_option("--slack", slack, "subtracted from the oblivious value (default epsilon/4)");
    app->add_option("--mbound-exp", mbound_exp, "assumed m < n^C");
    app->add_option("--c-spar", c_spar, "sparsification constant");
    app->add_option("--vcutoff", v_cutoff, "override the stored-vertex cutoff");
    app->add_option("--ecutoff", e_cutoff, "override the per-vertex edge cutoff");
    app->add_flag("--full-sampling", full_sampling, "force q = p = 1 in every layer");
    app->add_option("--batch", batch, "edges per parallel step");
  }

  dicut::RunConfig config() const {
    dicut::RunConfig c;
    c.epsilon = epsilon;
    c.seed = seed;
    c.scale = scale;
    if (!oblivious_config.empty()) c.alg = dicut::load_oblivious_config(oblivious_config);
    c.slack = slack;
    c.mbound_exp = mbound_exp;
    c.c_spar = c_spar;
    c.overrides.full_sampling = full_sampling;
    c.overrides.v_cutoff = v_cutoff;
    c.overrides.e_cutoff = e_cutoff;
    c.batch = batch;
    return c;
  }
};

struct GenFlags {
  dicut::GeneratorSpec spec;
  std::string direction = "out";

  void attach(CLI::App* app) {
    app->add_option("--family", spec.family, "generator family")
        ->check(CLI::IsMember(dicut::generator_families()));
    app->add_option("--n", spec.n, "vertex count");
    app->add_option("--m", spec.m, "edge count");
    app->add_option("--graph-seed", spec.seed, "generator seed");
    app->add_option("--p-in", spec.p_in, "planted-dicut: weight of non-planted edges");
    app->add_option("--p-out", spec.p_out, "planted-dicut: weight of planted edges");
    app->add_option("--direction", direction, "star direction")->check(CLI::IsMember({"out", "in"}));
    app->add_option("--alpha", spec.alpha, "power-law exponent");
    app->add_option("--k", spec.cycle_length, "cycle length");
  }

  dicut::GeneratorSpec get() const {
    auto s = spec;
    s.star_out = direction == "out";
    return s;
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming Max-DICUT sketch workbench"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a synthetic edge stream");
  GenFlags gen_flags;
  gen_flags.attach(gen);
  std::string gen_order = "as-generated";
  std::string gen_out;
  gen->add_option("--ordering", gen_order, "as-generated | random-permutation | adversarial");
  gen->add_option("--output", gen_out, "stream file (stdout if omitted)");
  // `--seed` is accepted as an alias of the generator seed here.
  gen->add_option("--seed", gen_flags.spec.seed, "generator seed");

  // run
  auto* run = app.add_subcommand("run", "estimate the Max-DICUT value of a stream");
  RunFlags run_flags;
  run_flags.attach(run);
  std::string run_in, run_out;
  run->add_option("--input", run_in, "edge stream file")->required();
  run->add_option("--output", run_out, "JSON result (stdout if omitted)");

  // verify-lemma
  auto* ver = app.add_subcommand("verify-lemma", "run one property suite");
  dicut::LemmaConfig lemma;
  std::string lemma_name, lemma_alg, lemma_out;
  ver->add_option("name", lemma_name, "suite name")->required()->check(CLI::IsMember(dicut::lemma_names()));
  ver->add_option("--seed", lemma.seed, "suite seed");
  ver->add_option("--trials", lemma.trials, "trial count (0 = suite default)");
  ver->add_option("--n", lemma.n, "vertex count (0 = suite default)");
  ver->add_option("--m", lemma.m, "edge count (0 = suite default)");
  ver->add_option("--epsilon", lemma.epsilon, "epsilon (0 = suite default)");
  ver->add_option("--scale", lemma.scale, "scale (0 = suite default)");
  ver->add_option("--oblivious-config", lemma_alg, "JSON oblivious algorithm");
  ver->add_option("--output", lemma_out, "JSON report (stdout if omitted)");

  // compare
  auto* cmp = app.add_subcommand("compare", "estimator against exact or lower-bound reference, as CSV");
  GenFlags cmp_gen;
  cmp_gen.attach(cmp);
  RunFlags cmp_run;
  cmp_run.attach(cmp);
  std::string cmp_order = "as-generated", cmp_out;
  int cmp_trials = 1;
  bool cmp_timing = false;
  cmp->add_option("--ordering", cmp_order, "as-generated | random-permutation | adversarial");
  cmp->add_option("--trials", cmp_trials, "number of trials")->check(CLI::PositiveNumber);
  cmp->add_flag("--timing", cmp_timing, "add a wall-clock column");
  cmp->add_option("--output", cmp_out, "CSV file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto s = dicut::order_stream(dicut::generate(gen_flags.get()), dicut::parse_ordering(gen_order),
                                         gen_flags.spec.seed);
      if (gen_out.empty()) {
        dicut::write_stream(std::cout, s);
      } else {
        dicut::write_stream(std::filesystem::path(gen_out), s);
      }
      return 0;
    }
    if (*run) {
      const auto stream = dicut::read_stream(run_in);
      const auto result = dicut::run_stream(stream, run_flags.config());
      emit(run_out, dicut::to_json(result).dump(2) + "\n");
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
      return result.overflow ? kExitOverflow : 0;
    }
    if (*ver) {
      if (!lemma_alg.empty()) lemma.alg = dicut::load_oblivious_config(lemma_alg);
      const auto report = dicut::verify_lemma(lemma_name, lemma);
      emit(lemma_out, report.dump(2) + "\n");
      return report["pass"].get<bool>() ? 0 : 1;
    }
    if (*cmp) {
      dicut::CompareConfig c;
      c.generator = cmp_gen.get();
      c.ordering = dicut::parse_ordering(cmp_order);
      c.run = cmp_run.config();
      c.trials = cmp_trials;
      c.timing = cmp_timing;
      emit(cmp_out, dicut::compare_csv(dicut::compare(c), c.timing));
      return 0;
    }
  } catch (const dicut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
