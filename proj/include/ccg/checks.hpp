#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "ccg/compressed.hpp"
#include "ccg/forcing.hpp"
#include "ccg/graph.hpp"
#include "ccg/util.hpp"

namespace ccg {

enum class Verdict { pass, fail, skipped };

// Outcome of one theorem check on one instance.  Failures carry a
// machine-readable witness (graph6 plus the relevant sets); skips carry the
// unmet hypothesis.
struct CheckResult {
    std::string theorem;
    std::string instance;
    std::string expected;
    std::string observed;
    Verdict verdict = Verdict::pass;
    std::string witness;

    bool failed() const { return verdict == Verdict::fail; }
};

struct CheckContext {
    const Deadline* deadline = nullptr;
    int confluence_trials = 100;
    unsigned seed = 1;
};

// A registered check: either runs once per corpus instance or carries its
// own fixed instances.
struct TheoremCheck {
    std::string id;
    std::string statement;
    std::function<CheckResult(const Graph&, const std::string&, const CheckContext&)> on_graph;
    std::function<std::vector<CheckResult>(const CheckContext&)> on_fixtures;

    bool per_graph() const { return static_cast<bool>(on_graph); }
};

const std::vector<TheoremCheck>& theorem_registry();
const TheoremCheck& find_check(const std::string& id);

struct Instance {
    std::string name;
    Graph graph;
};

struct RunOptions {
    std::vector<Instance> instances;
    std::vector<std::string> theorems;  // ids; empty selects every check
    int jobs = 1;
    int confluence_trials = 100;
    std::chrono::milliseconds timeout{30000};
};

// Executes the selected checks; per-graph checks run over every instance
// (in parallel when jobs > 1), fixture checks run once.  Result order does
// not depend on the number of jobs.
std::vector<CheckResult> run_checks(const RunOptions& opts);

std::string results_to_json(const std::vector<CheckResult>& results);
std::string result_to_line(const CheckResult& r);

// Replay of a compressed-graph forcing record on the source graph: each
// step's forcer cell supplies its lowest vertex, the forced cell's white
// representative turns black.  Validated against the rule step by step.
ForcingRecord replay_lifted_record(const Graph& g, const CompressedGraph& cg,
                                   const ForcingRecord& compressed_record);

}  // namespace ccg
