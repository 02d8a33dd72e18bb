#pragma once

#include "halg/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

namespace halg {

// HALG_MAX_DIM overrides the default ambient cap; FormatError when it is not a positive integer.
Limits limits_from_env();

// Reads a spec file; FormatError for unreadable or empty files and for parse errors.
Json load_spec_file(const std::string& path);

struct SuiteRun {
    std::string suite;
    std::string target;
    CheckReport report;
};

struct SpecRun {
    std::vector<SuiteRun> suites;
    // 0 when every item passes or is skipped, else 1.
    int exit_code() const;
};

// Builds every structure, then runs the checks in declared order (concurrently when parallel).
// base_dir resolves "include" paths. Throws FormatError on malformed input.
SpecRun run_spec(const Json& spec, const std::string& base_dir, const Limits& limits = {}, bool parallel = true);

// Versioned, deterministic: no timings.
Json report_json(const SpecRun& run);
std::string report_text(const SpecRun& run);

// "pair:n", "unit:n", "point:<group>", "action:<group>:<perm>", "enveloping:<alg>",
// "cm:<group>:<alg>[:<perm>]", "finite1forms:n", "toykahler"; <alg> is "ground" or "C<n>".
Json construct_preset(const std::string& preset, const Limits& limits = {});
std::vector<std::string> preset_names();

struct InvariantListing {
    std::string id;
    std::string kind;  // "forms" or "base"
    std::vector<std::string> labels;
    // (degree, invariant subspace of that degree, ambient dimension of that degree)
    std::vector<std::pair<int, Subspace>> per_degree;
    std::vector<Index> ambient;
};
// Invariant forms of a calculus or Kähler structure, or B_H for a module or algebroid.
InvariantListing invariants_of(const Json& spec, const std::string& base_dir, const std::string& id,
                               const Limits& limits = {});
std::string listing_text(const InvariantListing& l);

}  // namespace halg
