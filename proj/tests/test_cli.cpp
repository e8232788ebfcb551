#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef CYCLO_CLI_PATH
#error "CYCLO_CLI_PATH must point at the cyclo binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CYCLO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("height and witness outputs") {
    auto h = run_cli("height \"1 + w5\"");
    CHECK(h.exit_code == 0);
    CHECK(h.out == "{\"value\":\"3/2\",\"conductor_used\":5,\"term_count\":2}\n");

    auto w = run_cli("cp-witness 5 1 1");
    CHECK(w.exit_code == 0);
    CHECK(w.out == "{\"a\":[0,-1,0,1,1],\"value\":\"7/2\"}\n");

    auto q = run_cli("quad poly1 1");
    CHECK(q.exit_code == 0);
    CHECK(q.out == "{\"form\":\"poly1\",\"m\":1,\"solution\":[1,-1,0],\"verified\":true}\n");
}

TEST_CASE("no floating point in any output") {
    for (const char* cmd :
         {"height \"1 - 2*w5^3 + w5\"", "mtrace w7", "cp-enum 7 --bound 3",
          "limit2 1 1 --side below --count 5", "limitn 1 1 --count 4", "c3 91"}) {
        auto res = run_cli(cmd);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find('.') == std::string::npos);
    }
}

TEST_CASE("byte-identical reruns") {
    for (const char* cmd : {"cp-enum 11 --bound 4 --format csv", "label fragment",
                            "limit2 \"1 + w3\" \"1 + w7\" --side above --count 6"}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli("height \"w0\"").exit_code == 2);       // parse error
    CHECK(run_cli("height").exit_code == 2);              // usage error
    CHECK(run_cli("cp-witness 3 0 0").exit_code == 3);    // domain error
    CHECK(run_cli("cp-witness 5 9 0").exit_code == 3);    // s out of range
    CHECK(run_cli("c3 1000036000099").exit_code == 4);    // factor bound exceeded
    CHECK(run_cli("shift \"1 + w3 + w3^2\"").exit_code == 3);  // zero input
}

TEST_CASE("formats") {
    auto csv = run_cli("cp-enum 5 --bound 3/2 --format csv");
    CHECK(csv.out ==
          "p,s,r,value,witness\n5,0,0,0/1,\"0 0 0 0 0\"\n5,1,0,1/1,\"1 0 0 0 0\"\n"
          "5,2,0,3/2,\"1 1 0 0 0\"\n");
    auto text = run_cli("mtrace w5 --format text");
    CHECK(text.out == "value = -1/4\n");
    auto memb = run_cli("cp-member 5 7/2");
    CHECK(memb.out == "{\"member\":true,\"s\":1,\"r\":1}\n");
    auto nomemb = run_cli("cp-member 5 3");
    CHECK(nomemb.out == "{\"member\":false}\n");
}
