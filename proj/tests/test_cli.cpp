#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run gcb_run(const std::string& args, const std::string& env = {}) {
    std::string cmd = env + " " + std::string(GCB_BINARY) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli verify") {
    CHECK(gcb_run("verify " + fx::corpus("zest_trivial_z2_mu.json")).code == 0);
    auto r = gcb_run("verify " + fx::corpus("mutant_braid.json"));
    CHECK(r.code == 1);
    CHECK(r.out.find("(beta2) at (") != std::string::npos);
    auto g = gcb_run("verify " + fx::corpus("gray_trivial_z2_mu.json"));
    CHECK(g.code == 0);
    CHECK(g.out.find("gray") != std::string::npos);
    CHECK(gcb_run("verify /nonexistent.json").code == 2);
}

TEST_CASE("cli work bound") {
    auto p = fx::corpus("zest_bichar_z3.json");
    CHECK(gcb_run("verify " + p).code == 2);
    CHECK(gcb_run("verify " + p + " --force --jobs 3").code == 0);
    CHECK(gcb_run("verify " + p, "GCB_MAX_ORDER=10000").code == 0);
    CHECK(gcb_run("verify " + p, "GCB_MAX_ORDER=lots").code == 2);
}

TEST_CASE("cli obstruction and enumerate") {
    auto r = gcb_run("obstruction " + fx::corpus("semion.json") + " --group Z2 --mu " + fx::corpus("mu_z2_z2.json"));
    CHECK(r.code == 1);
    CHECK(r.out == "o4(1,1,1,1) = 1\nno omega exists\n");
    auto e = gcb_run("enumerate --A Z2 --K Z4");
    CHECK(e.code == 0);
    CHECK(e.out == "quadratic forms: 4, cocycle classes: 4\n");
}

TEST_CASE("cli zest output re-verifies") {
    std::string out = "/tmp/gcb_cli_zest.json";
    CHECK(gcb_run("zest " + fx::corpus("trivial_z2_z4.json") + " --group Z2 --out " + out).code == 0);
    CHECK(gcb_run("verify " + out).code == 0);
    CHECK(gcb_run("roundtrip " + out).code == 0);
    CHECK(gcb_run("decategorify " + out + " --out /tmp/gcb_cli_dec.json").code == 0);
    CHECK(gcb_run("verify /tmp/gcb_cli_dec.json").code == 0);
    CHECK(gcb_run("zest " + fx::corpus("semion.json") + " --group Z2 --mu " + fx::corpus("mu_z2_z2.json")).code == 1);
    CHECK(gcb_run("zest " + fx::corpus("semion.json") + " --group Q8").code == 2);
}
