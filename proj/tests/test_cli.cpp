#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef CONFSPACE_CLI_PATH
#error "CONFSPACE_CLI_PATH must point at the cli binary"
#endif
#ifndef CONFSPACE_DATA_DIR
#error "CONFSPACE_DATA_DIR must point at the sample data directory"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = std::string(CONFSPACE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string cfg1 = std::string("--config ") + CONFSPACE_DATA_DIR + "/config_s1xd3_L1.json";

} // namespace

TEST_CASE("basis listings") {
    auto r = run(cfg1 + " basis --kind pi5C3");
    CHECK(r.code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 18);
    CHECK(r.out.find("Mix(s;s)") != std::string::npos);

    // empty chart prints an empty listing
    auto empty = run(cfg1 + " basis --kind pi4C1");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    auto bad = run(cfg1 + " basis --kind pi9C9");
    CHECK(bad.code == 2);
}

TEST_CASE("whitehead products from the command line") {
    auto r = run(cfg1 + " wh --left 'W(1,2;s)' --right 'W(2,3;s)'");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"terms\":[{\"coeff\":\"1\",\"symbol\":\"Mix(s;s)\"}]}\n");

    auto err = run(cfg1 + " wh --left 'W(1,2;s' --right 'W(2,3;s)'");
    CHECK(err.code == 2);
}

TEST_CASE("verify exits zero exactly when the suite passes") {
    auto r = run(cfg1 + " verify --suite relations");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS relations") == 0);

    auto bad = run(cfg1 + " verify --suite bogus");
    CHECK(bad.code == 2);
}

TEST_CASE("rank certificates are canonical") {
    const std::string classes = std::string(CONFSPACE_DATA_DIR) + "/classes_sample.json";
    auto a = run(cfg1 + " rank --classes " + classes + " --mode quotient");
    auto b = run(cfg1 + " rank --classes " + classes + " --mode quotient");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"rank\":1") != std::string::npos);
    CHECK(a.out.find("\"chart_dim\":3") != std::string::npos);

    auto t = run(cfg1 + " rank --classes " + classes + " --mode theta");
    CHECK(t.code == 0);
    CHECK(t.out.find("\"rank\":1") != std::string::npos);
}

TEST_CASE("theta evaluation from the command line") {
    auto r = run(cfg1 + " theta --index 'composite(1,1)' --vector 'Mix(s;s)'");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    auto v = run(cfg1 + " theta --vector '2*Mix(s;s) + Sq(1,3;e;s)'");
    CHECK(v.code == 0);
    CHECK(v.out == "{\"composite(1,1)\":\"2\",\"square(1,3,0,1)\":\"1\"}\n");
    auto bad = run(cfg1 + " theta --restricted --index 'composite(1,0)' --vector 'Mix(s;s)'");
    CHECK(bad.code == 2);
}
