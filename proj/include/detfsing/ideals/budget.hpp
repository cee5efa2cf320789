#ifndef DETFSING_IDEALS_BUDGET_HPP
#define DETFSING_IDEALS_BUDGET_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace detfsing {

/// Resource caps for one unit of work (typically one verification check).
struct Budget {
    std::uint64_t max_reductions = 5'000'000;
    double max_seconds = 120.0;
    unsigned max_degree = 0;  // 0 = uncapped
};

/// Counters accumulated across every Groebner run charged to a Context.
struct GBStats {
    std::uint64_t spairs_processed = 0;
    std::uint64_t reductions = 0;
    unsigned max_degree_seen = 0;
    double elapsed_ms = 0;

    void merge(const GBStats& o) {
        spairs_processed += o.spairs_processed;
        reductions += o.reductions;
        max_degree_seen = std::max(max_degree_seen, o.max_degree_seen);
        elapsed_ms += o.elapsed_ms;
    }
    bool operator==(const GBStats&) const = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A resource cap was hit. The computation is inconclusive, never false.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string resource, GBStats stats)
        : Error("budget exceeded: " + resource), resource_(std::move(resource)), stats_(stats) {}
    const std::string& resource() const noexcept { return resource_; }
    const GBStats& stats() const noexcept { return stats_; }

private:
    std::string resource_;
    GBStats stats_;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class ImproperIdeal : public Error {
public:
    ImproperIdeal() : Error("ideal is the unit ideal") {}
};

class IterationCapExceeded : public Error {
public:
    explicit IterationCapExceeded(unsigned cap)
        : Error("iteration cap of " + std::to_string(cap) + " exceeded") {}
};

/// Per-task accounting: budget enforcement plus statistics. Not shared
/// between threads.
class Context {
public:
    explicit Context(Budget budget = {}) : budget_(budget), start_(Clock::now()) {}

    const Budget& budget() const noexcept { return budget_; }

    void count_reduction() {
        if (++stats_.reductions > budget_.max_reductions) fail("reductions");
        if ((stats_.reductions & 0x3FF) == 0) check_time();
    }

    void count_spair(unsigned degree) {
        ++stats_.spairs_processed;
        see_degree(degree);
        if ((stats_.spairs_processed & 0x3F) == 0) check_time();
    }

    void see_degree(unsigned degree) {
        stats_.max_degree_seen = std::max(stats_.max_degree_seen, degree);
        if (budget_.max_degree && degree > budget_.max_degree) fail("degree");
    }

    void check_time() {
        if (elapsed_ms() > budget_.max_seconds * 1000.0) fail("seconds");
    }

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

    GBStats stats() const {
        GBStats s = stats_;
        s.elapsed_ms = elapsed_ms();
        return s;
    }

private:
    using Clock = std::chrono::steady_clock;

    [[noreturn]] void fail(const std::string& what) const { throw BudgetExceeded(what, stats()); }

    Budget budget_;
    Clock::time_point start_;
    GBStats stats_;
};

}  // namespace detfsing

#endif  // DETFSING_IDEALS_BUDGET_HPP
