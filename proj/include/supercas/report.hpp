// Check records and report assembly: human-readable tables on stdout and a
// deterministic JSON document per instance.
#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "supercas/osp.hpp"
#include "supercas/rational.hpp"

namespace supercas {

struct CheckRecord {
    std::string suite;
    std::string name;
    std::string status; // "pass" | "fail" | "skipped"
    std::string reason; // skip reason, empty otherwise
    std::string expected;
    std::string computed;
    double elapsed_ms = 0.0;
};

struct InstanceReport {
    std::string algebra; // "osp" | "sl"
    std::size_t M = 0, N = 0;
    long omega = 0;
    std::vector<CheckRecord> checks;
    std::vector<DimRow> dims;
    bool has_dims = false;
    std::vector<Rational> series_direct, series_universal;
    bool has_series = false;

    int failures() const;
    int passes() const;
    int skips() const;
    std::string to_json() const; // single-instance document
    void print(bool verbose) const;
};

std::string reports_to_json(const std::vector<InstanceReport>& reports);

// Helper for timing + uniform record construction.
class Checker {
public:
    Checker(InstanceReport& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}

    void pass_fail(const std::string& name, bool ok, const std::string& expected = "0",
                   const std::string& computed_on_fail = "");
    void skip(const std::string& name, const std::string& reason);
    // records elapsed time of fn around the check
    template <typename F>
    void timed(const std::string& name, F&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = fn();
        auto t1 = std::chrono::steady_clock::now();
        pass_fail(name, ok);
        rep_.checks.back().elapsed_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    }

private:
    InstanceReport& rep_;
    std::string suite_;
};

} // namespace supercas
