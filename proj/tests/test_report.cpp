#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supercas/report.hpp"
#include "supercas/suites.hpp"

using namespace supercas;

TEST_CASE("check records and counting") {
    InstanceReport rep;
    rep.algebra = "osp";
    rep.M = 5;
    rep.N = 2;
    rep.omega = 3;
    Checker ck(rep, "demo");
    ck.pass_fail("good", true);
    ck.pass_fail("bad", false, "0", "1/2");
    ck.skip("later", "not applicable");
    CHECK(rep.passes() == 1);
    CHECK(rep.failures() == 1);
    CHECK(rep.skips() == 1);
    std::string j = rep.to_json();
    CHECK(j.find("\"algebra\": \"osp\"") != std::string::npos);
    CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(j.find("\"expected\": \"0\"") != std::string::npos);
    CHECK(j.find("\"reason\": \"not applicable\"") != std::string::npos);
}

TEST_CASE("reports are deterministic for fixed inputs") {
    auto strip_timing = [](std::string s) {
        // elapsed_ms values vary run to run; drop those lines
        std::string out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t e = s.find('\n', pos);
            if (e == std::string::npos) e = s.size();
            std::string line = s.substr(pos, e - pos);
            if (line.find("elapsed_ms") == std::string::npos) out += line + "\n";
            pos = e + 1;
        }
        return out;
    };
    auto r1 = run_instance(AlgebraKind::sl, 2, 1, {Suite::defining, Suite::ybe});
    auto r2 = run_instance(AlgebraKind::sl, 2, 1, {Suite::defining, Suite::ybe});
    CHECK(strip_timing(r1.to_json()) == strip_timing(r2.to_json()));
    CHECK(r1.failures() == 0);
}

TEST_CASE("suite names round-trip") {
    for (const char* n :
         {"defining", "adjoint", "projectors", "ybe", "brauer", "vogel", "series"})
        CHECK(suite_from_string(n).has_value());
    CHECK(!suite_from_string("everything").has_value());
    CHECK(all_suites().size() == 7);
    CHECK(default_instances().size() == 12);
}

TEST_CASE("dims table helper") {
    auto t = dims_table(AlgebraKind::sl, 4, 1);
    REQUIRE(t.size() == 7);
    CHECK(t[3].name == "V1(+)");
    CHECK(t[3].even == 1);
    CHECK(t[3].odd == 0);
}
