#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace chern::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kChecksFailed = 1, kSchemaError = 2, kComputeError = 3 };

/// Malformed job: bad JSON, unknown or missing fields, unparsable polynomials.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside the algebra; module names the component that raised it.
class ComputeError : public std::runtime_error {
 public:
  ComputeError(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool timings = true;
};

struct RunResult {
  json report;
  bool passed = true;
};

/// CHERN_CHARACTERISTIC, or 32003 when unset.
std::uint32_t default_characteristic();

json load_json(const std::filesystem::path& path);

/// Executes the operations listed in a job.
RunResult run_job(const json& job, const RunOptions& options = {});

/// Runs the theorem suite and the stated claims on one corpus instance.
RunResult check_instance(const json& job, const RunOptions& options = {});

/// check_instance over every *.json file of dir, merged by instance name.
RunResult check_corpus(const std::filesystem::path& dir, const RunOptions& options = {});

/// Tables of a compute report as "op,n,value" rows.
std::string to_csv(const json& report);

}  // namespace chern::cli
