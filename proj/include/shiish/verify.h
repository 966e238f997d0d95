#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shiish/bijections.h"
#include "shiish/core.h"

namespace shiish::verify {

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    Status status = Status::pass;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // logged, never asserted
    nlohmann::json data = nlohmann::json::object();

    void check(std::string name, bool passed, std::string detail = "");
    void note(std::string text) { notes.push_back(std::move(text)); }
    void skip(std::string reason);
    bool passed() const { return status == Status::pass; }
    nlohmann::json to_json() const;
};

struct SuiteOptions {
    int n = 3;
    /// Restricts graph sweeps to one graph; otherwise every graph on [n]
    /// for n <= 4 and the complete graph above that.
    std::optional<Graph> graph;
    int jobs = 1;
    bool allow_large = false;
    std::function<void(const std::string&)> progress;
};

std::vector<std::string_view> suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

SuiteReport cycle_lemma(const SuiteOptions& options);
SuiteReport thm_basic(const SuiteOptions& options);
SuiteReport thm_dominance(const SuiteOptions& options);
SuiteReport thm_bounded(const SuiteOptions& options);
SuiteReport thm_freedom(const SuiteOptions& options);
SuiteReport formulas(const SuiteOptions& options);
SuiteReport negative_controls(const SuiteOptions& options);
SuiteReport factorization_candidates(const SuiteOptions& options);

/// Result of pushing every Ish(G) region of the map's domain through a bijection.
struct BijectionSweep {
    std::size_t domain = 0;
    std::size_t codomain = 0;
    std::size_t distinct_images = 0;
    bool outputs_valid = true;
    bool inverse_ok = true;
    std::size_t ceiling_partition_changes = 0;
    std::size_t dominance_changes = 0;
    std::size_t dof_changes = 0;
    std::string first_problem;

    bool bijective() const { return outputs_valid && distinct_images == domain && domain == codomain; }
};

/// For `bounded` the domain and codomain are the relatively bounded regions.
BijectionSweep sweep_bijection(BijectionKind kind, int n, const Graph& g);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace shiish::verify
