#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ksym::props {

struct Options {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n_max = 2;
  std::size_t k_max = 3;
  std::size_t jobs = 1;
};

struct Counts {
  std::size_t pass = 0;
  std::size_t fail = 0;
};

struct Failure {
  std::string label;
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::string message;
  nlohmann::json instance;
};

struct Report {
  Options options;
  std::map<std::string, Counts> labels;
  std::vector<Failure> failures;  // sorted by trial, then check order

  bool ok() const { return failures.empty(); }
};

// Seed of trial `t`; every trial is reproducible on its own.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

// Runs every property on `trials` random instances with n <= n_max and
// k <= k_max. Trials may run on `jobs` threads; the report is independent of
// the thread count.
Report run(const Options& options);

nlohmann::json to_json(const Report& report);

// Every label `run` can report.
const std::vector<std::string>& labels();

}  // namespace ksym::props
