// Suite registry: named verification suites per algebra instance, producing
// CheckRecords consumed by the CLI and the acceptance harness.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercas/report.hpp"
#include "supercas/sl.hpp"
#include "supercas/vogel.hpp"

namespace supercas {

enum class Suite { defining, adjoint, projectors, ybe, brauer, vogel, series };

std::optional<Suite> suite_from_string(const std::string& s);
std::vector<Suite> all_suites();

struct InstanceSpec {
    AlgebraKind kind;
    std::size_t M = 0, N = 0;
};

// The default instance matrix for `verify --suite all` with no explicit
// (M, N): the union of the per-suite verification instances.
std::vector<InstanceSpec> default_instances();

// Runs the requested suites on one instance.
InstanceReport run_instance(AlgebraKind kind, std::size_t M, std::size_t N,
                            const std::vector<Suite>& suites, unsigned series_order = 8);

// Closed-form dimension table (for the dims subcommand).
std::vector<DimRow> dims_table(AlgebraKind kind, std::size_t M, std::size_t N);

} // namespace supercas
