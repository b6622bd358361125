#pragma once

#include "somos_cli/params.hpp"

#include <somos/verdict.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace somos::cli {

struct SuiteContext {
  Symbols sym = Symbols::symbolic();
  std::optional<std::size_t> depth;
  std::uint64_t seed = 0;

  std::size_t depth_or(std::size_t fallback) const { return depth.value_or(fallback); }
};

/// Independent unit of work; its items are keyed under `label`.
struct Task {
  std::string label;
  std::function<VerdictReport()> run;
};

struct Suite {
  std::string_view name;
  std::size_t default_depth;
  std::function<std::vector<Task>(const SuiteContext&)> plan;
};

const std::vector<Suite>& suite_registry();
const Suite* find_suite(std::string_view name);

struct RunOptions {
  unsigned jobs = 1;
  bool timings = false;
};

/// Runs one suite, or every suite for "all", on a pool of `jobs` workers.
/// Items come back sorted by key; exceptions inside a task become failing
/// items. Throws std::invalid_argument for an unknown suite name.
VerdictReport run_suite(std::string_view name, const SuiteContext& ctx, const RunOptions& opt);

}  // namespace somos::cli
