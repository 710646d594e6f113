#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "chern/cli.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "chern: cannot write " << out_path << '\n';
    return chern::cli::kComputeError;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace chern::cli;
  CLI::App app{"Hilbert coefficients, local cohomology and Buchsbaum-Rim invariants of graded modules"};
  app.require_subcommand(1);

  std::string job_path, corpus_dir, out_path, format;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool no_timings = false;

  auto* compute = app.add_subcommand("compute", "run the operations listed in a job file");
  compute->add_option("job", job_path, "job file (JSON)")->required();
  compute->add_option("--seed", seed, "sampling seed (overrides job.sample.seed)");
  compute->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  compute->add_option("--out", out_path, "write the report here instead of stdout");
  compute->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  compute->add_flag("--no-timings", no_timings, "omit timings from the report");

  auto* check = app.add_subcommand("check", "run the theorem suite over a corpus directory");
  check->add_option("corpus", corpus_dir, "directory of instance files")->required();
  check->add_option("--seed", seed, "base seed");
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  RunOptions options;
  options.seed = seed;
  options.jobs = jobs;
  options.timings = !no_timings;
  try {
    RunResult result;
    std::string text;
    if (*compute) {
      const auto job = load_json(job_path);
      result = run_job(job, options);
      const std::string fmt = !format.empty() ? format : result.report.value("format", "json");
      text = fmt == "csv" ? to_csv(result.report) : result.report.dump(2) + "\n";
    } else {
      result = check_corpus(corpus_dir, options);
      text = result.report.dump(2) + "\n";
      for (const auto& f : result.report["failures"]) std::cerr << "FAIL " << f.get<std::string>() << '\n';
    }
    if (int rc = emit(text, out_path); rc != 0) return rc;
    return result.passed ? kPass : kChecksFailed;
  } catch (const SchemaError& e) {
    std::cerr << "chern: schema error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const ComputeError& e) {
    std::cerr << "chern: computation error in " << e.what() << '\n';
    return kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "chern: computation error: " << e.what() << '\n';
    return kComputeError;
  }
}
