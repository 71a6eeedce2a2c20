#ifndef MAGICLAT_SURVEY_HPP
#define MAGICLAT_SURVEY_HPP

#include <magiclat/generate.hpp>
#include <magiclat/hypergraph.hpp>
#include <magiclat/magic.hpp>
#include <magiclat/substructures.hpp>

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace magiclat {

struct SurveyRow {
    int n = 0;
    std::size_t total = 0;
    std::size_t with_small = 0;
    std::size_t magic = 0;
    std::size_t magic_over_int = 0;

    bool operator==(const SurveyRow&) const = default;

    std::string to_string() const {
        std::ostringstream out;
        out << n << ": total=" << total << " small=" << with_small << " magic=" << magic
            << " magicZ=" << magic_over_int;
        return out.str();
    }
};

inline unsigned survey_thread_count() {
    if (const char* env = std::getenv("MAGICLAT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Per-configuration analysis tallied into a census row.  Pure per element,
/// so the reduction order never matters.
inline SurveyRow survey(int n, const std::vector<Hypergraph>& configs) {
    SurveyRow row;
    row.n = n;
    row.total = configs.size();

    const unsigned threads = survey_thread_count();
    std::atomic<std::size_t> next{0};
    std::vector<SurveyRow> partial(threads);
    auto worker = [&](unsigned tid) {
        SurveyRow& acc = partial[tid];
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) break;
            const Hypergraph& h = configs[i];
            if (scan_small_forbidden(h).found) ++acc.with_small;
            if (decide_some_group(h).magic()) {
                ++acc.magic;
                if (decide_over_int(h).magic()) ++acc.magic_over_int;
            }
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const SurveyRow& p : partial) {
        row.with_small += p.with_small;
        row.magic += p.magic;
        row.magic_over_int += p.magic_over_int;
    }
    return row;
}

inline SurveyRow survey(int n) { return survey(n, generate_n3(n)); }

/// Census over an ingested multi-hypergraph file; every section must be an
/// n3-configuration on n points.
inline SurveyRow survey_ingest(int n, const std::string& text) {
    std::vector<Hypergraph> configs = parse_hypergraphs(text);
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const Hypergraph& h = configs[i];
        StructureReport r = validate(h);
        if (h.n != n || !r.is_configuration || !r.symmetric || !r.k || *r.k != 3)
            throw std::invalid_argument("configuration " + std::to_string(i + 1) +
                                        " is not an n3-configuration on " + std::to_string(n) +
                                        " points");
    }
    return survey(n, configs);
}

}  // namespace magiclat

#endif
