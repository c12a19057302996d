#include "supercas/report.hpp"

#include <cstdio>
#include <json.hpp>

namespace supercas {

int InstanceReport::failures() const {
    int n = 0;
    for (const auto& c : checks) n += (c.status == "fail");
    return n;
}

int InstanceReport::passes() const {
    int n = 0;
    for (const auto& c : checks) n += (c.status == "pass");
    return n;
}

int InstanceReport::skips() const {
    int n = 0;
    for (const auto& c : checks) n += (c.status == "skipped");
    return n;
}

namespace {

nlohmann::ordered_json instance_json(const InstanceReport& r) {
    nlohmann::ordered_json j;
    j["algebra"] = r.algebra;
    j["M"] = r.M;
    j["N"] = r.N;
    j["omega"] = r.omega;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["suite"] = c.suite;
        cj["name"] = c.name;
        cj["status"] = c.status;
        if (!c.reason.empty()) cj["reason"] = c.reason;
        if (c.status == "fail") {
            cj["expected"] = c.expected;
            cj["computed"] = c.computed;
        }
        cj["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (r.has_dims) {
        nlohmann::ordered_json d;
        for (const auto& row : r.dims) d[row.name] = {row.even, row.odd};
        j["dims"] = std::move(d);
    }
    if (r.has_series) {
        nlohmann::ordered_json s;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : r.series_direct) arr.push_back(rat_str(c));
        s["direct"] = std::move(arr);
        arr = nlohmann::ordered_json::array();
        for (const auto& c : r.series_universal) arr.push_back(rat_str(c));
        s["universal"] = std::move(arr);
        j["series"] = std::move(s);
    }
    return j;
}

} // namespace

std::string InstanceReport::to_json() const { return instance_json(*this).dump(2); }

std::string reports_to_json(const std::vector<InstanceReport>& reports) {
    if (reports.size() == 1) return reports[0].to_json();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(instance_json(r));
    return arr.dump(2);
}

void InstanceReport::print(bool verbose) const {
    std::printf("== %s(%zu|%zu)  omega=%ld\n", algebra.c_str(), M, N, omega);
    std::string cur;
    for (const auto& c : checks) {
        if (c.status == "pass" && !verbose) continue;
        if (c.suite != cur) {
            cur = c.suite;
            std::printf("  [%s]\n", cur.c_str());
        }
        if (c.status == "skipped")
            std::printf("    SKIP %-58s (%s)\n", c.name.c_str(), c.reason.c_str());
        else if (c.status == "fail")
            std::printf("    FAIL %-58s expected=%s computed=%s\n", c.name.c_str(),
                        c.expected.c_str(), c.computed.c_str());
        else
            std::printf("    ok   %s\n", c.name.c_str());
    }
    if (has_dims) {
        std::printf("  dims:\n");
        for (const auto& d : dims) std::printf("    %-10s (%ld, %ld)\n", d.name.c_str(), d.even, d.odd);
    }
    if (has_series) {
        std::printf("  series (direct):   ");
        for (const auto& c : series_direct) std::printf("%s ", rat_str(c).c_str());
        std::printf("\n  series (universal):");
        for (const auto& c : series_universal) std::printf("%s ", rat_str(c).c_str());
        std::printf("\n");
    }
    std::printf("  summary: %d pass, %d fail, %d skipped\n", passes(), failures(), skips());
}

void Checker::pass_fail(const std::string& name, bool ok, const std::string& expected,
                        const std::string& computed_on_fail) {
    CheckRecord c;
    c.suite = suite_;
    c.name = name;
    c.status = ok ? "pass" : "fail";
    if (!ok) {
        c.expected = expected;
        c.computed = computed_on_fail.empty() ? "differs" : computed_on_fail;
    }
    rep_.checks.push_back(std::move(c));
}

void Checker::skip(const std::string& name, const std::string& reason) {
    CheckRecord c;
    c.suite = suite_;
    c.name = name;
    c.status = "skipped";
    c.reason = reason;
    rep_.checks.push_back(std::move(c));
}

} // namespace supercas
