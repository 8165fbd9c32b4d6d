#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersing/checks.hpp"

namespace hypersing {

inline constexpr const char* kVersion = "0.1.0";

struct EntryReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
};

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t inconclusive = 0;
    std::size_t error = 0;
};

struct Report {
    std::string version = kVersion;
    std::uint64_t seed = 0;
    std::uint64_t height = kDefaultHeight;
    std::string corpus_name;
    std::uint64_t corpus_digest = 0;
    std::vector<EntryReport> entries;
    Summary summary;
    std::uint64_t elapsed_ms = 0;
};

struct RunOptions {
    std::uint64_t seed = 0;
    std::uint64_t height = kDefaultHeight;
    unsigned jobs = 1;
    /// Empty means every requested check; otherwise only these are run.
    std::vector<CheckKind> only;
    Limits limits;
};

/// Runs every entry's requested checks; entries run concurrently up to
/// options.jobs, and the report keeps corpus order.
Report run_corpus(const Corpus& corpus, const RunOptions& options);

/// JSON text. Without timing, equal inputs give byte-identical output.
std::string to_json(const Report& report, bool include_timing = true);

/// Fixed-width text table, one row per check.
std::string to_table(const Report& report);

/// 0 unless a check failed (1); with strict, INCONCLUSIVE or ERROR give 3.
int exit_code(const Report& report, bool strict);

}  // namespace hypersing
