#include "hypersing/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace hypersing {

Report run_corpus(const Corpus& corpus, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.seed = options.seed;
    report.height = options.height;
    report.corpus_name = corpus.name;
    report.corpus_digest = corpus.digest;
    report.entries.resize(corpus.entries.size());

    auto run_entry = [&](std::size_t i) {
        const CorpusEntry& entry = corpus.entries[i];
        EntryReport& out = report.entries[i];
        out.name = entry.name;
        out.seed = entry.seed ? *entry.seed : entry_seed(options.seed, entry.name);
        const Sampler sampler(out.seed, options.height);
        for (CheckKind k : entry.checks) {
            if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), k) == options.only.end())
                continue;
            out.checks.push_back(run_check(entry, k, sampler, options.limits));
        }
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.entries.size();) run_entry(i);
    };
    const unsigned threads =
        std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(corpus.entries.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& e : report.entries) {
        for (const auto& c : e.checks) {
            switch (c.verdict) {
                case Verdict::pass: ++report.summary.pass; break;
                case Verdict::fail: ++report.summary.fail; break;
                case Verdict::inconclusive: ++report.summary.inconclusive; break;
                case Verdict::error: ++report.summary.error; break;
            }
        }
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string to_json(const Report& report, bool include_timing) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["version"] = report.version;
    doc["seed"] = report.seed;
    doc["height"] = report.height;
    doc["corpus"] = report.corpus_name;
    doc["corpus_digest"] = hex64(report.corpus_digest);
    doc["entries"] = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json je;
        je["name"] = e.name;
        je["seed"] = e.seed;
        je["checks"] = ordered_json::array();
        for (const auto& c : e.checks) {
            ordered_json jc;
            jc["check"] = c.check;
            jc["verdict"] = to_string(c.verdict);
            jc["witness"] = ordered_json::object();
            for (const auto& [k, v] : c.witness) jc["witness"][k] = v;
            jc["message"] = c.message;
            je["checks"].push_back(std::move(jc));
        }
        doc["entries"].push_back(std::move(je));
    }
    doc["summary"] = {{"pass", report.summary.pass},
                      {"fail", report.summary.fail},
                      {"inconclusive", report.summary.inconclusive},
                      {"error", report.summary.error}};
    if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
    return doc.dump(2) + "\n";
}

std::string to_table(const Report& report) {
    std::size_t wn = 5, wc = 5;
    for (const auto& e : report.entries) {
        wn = std::max(wn, e.name.size());
        for (const auto& c : e.checks) wc = std::max(wc, c.check.size());
    }
    std::ostringstream out;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        out << a << std::string(wn - a.size() + 2, ' ') << b << std::string(wc - b.size() + 2, ' ') << c
            << std::string(14 - std::min<std::size_t>(c.size(), 13), ' ') << d << '\n';
    };
    row("entry", "check", "verdict", "message");
    for (const auto& e : report.entries)
        for (const auto& c : e.checks) row(e.name, c.check, to_string(c.verdict), c.message);
    out << "\npass " << report.summary.pass << ", fail " << report.summary.fail << ", inconclusive "
        << report.summary.inconclusive << ", error " << report.summary.error << " (" << report.elapsed_ms
        << " ms)\n";
    return out.str();
}

int exit_code(const Report& report, bool strict) {
    if (report.summary.fail > 0) return 1;
    if (strict && (report.summary.inconclusive > 0 || report.summary.error > 0)) return 3;
    return 0;
}

}  // namespace hypersing
