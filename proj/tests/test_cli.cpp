#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    std::string output;
    int code;
};

// runs the installed tool through the shell, stderr folded into the capture
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + SCT_CLI_PATH " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
    int status = pclose(p);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

} // namespace

TEST_CASE("printed series and expansions") {
    RunResult r = run("series --name kappa --weight 2");
    CHECK(r.code == 0);
    CHECK(r.output == "S[0] + S[1,0,0] + S[2,0,0,0] - S[1,1,0,0,0]\n");

    r = run("nsym --what K --degree 4 --basis R");
    CHECK(r.code == 0);
    CHECK(r.output == "-(R[1,3] + 2R[1,2,1] + 3R[1,1,2] + 5R[1,1,1,1])\n");

    r = run("nsym --what g --degree 3");
    CHECK(r.code == 0);
    CHECK(r.output == "S[3] + 2S[2,1] + S[1,2] + S[1,1,1]\n");

    r = run("classical --n 3");
    CHECK(r.code == 0);
    CHECK(r.output == "k1 = m1\nk2 = -m1^2 + m2\nk3 = 2m1^3 - 3m2m1 + m3\n");

    r = run("cumulant --n 2 --mode scalar");
    CHECK(r.code == 0);
    CHECK(r.output == "-m[a2]m[a1] + m[a1a2]\n");
}

TEST_CASE("tree enumeration output") {
    RunResult r = run("enumerate --kind prime --weight 0");
    CHECK(r.code == 0);
    CHECK(r.output == "0\n");

    r = run("enumerate --kind all --weight 2");
    CHECK(r.code == 0);
    CHECK(r.output == "2,0,0,0\n1,1,0,0,0\n1,0,1,0,0\n");

    r = run("enumerate --kind left-directed --weight 3");
    CHECK(r.code == 0);
    CHECK(r.output.find("3,0,0,0,0\n") == 0);
}

TEST_CASE("partition operations") {
    RunResult r = run("partition --op kreweras --set \"1,3,4|2|5,7|6|8\"");
    CHECK(r.code == 0);
    CHECK(r.output == "1,2|3|4,7,8|5,6\n");

    r = run("partition --op moebius --lower \"1|2|3\" --upper \"1,2,3\"");
    CHECK(r.code == 0);
    CHECK(r.output == "2\n");

    r = run("partition --op kreweras --set \"1,3|2,4\"");
    CHECK(r.code == 2);

    r = run("partition --op moebius --lower \"1,2,3\" --upper \"1|2|3\"");
    CHECK(r.code == 2);
}

TEST_CASE("verification suites through the tool") {
    RunResult r = run("verify --suite counting --weight 4");
    CHECK(r.code == 0);
    CHECK(r.output.find("passed 6 of 6 checks") != std::string::npos);

    r = run("verify --suite all --weight 6");
    CHECK(r.code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);

    r = run("verify --suite nonsense --weight 3");
    CHECK(r.code == 2);
}

TEST_CASE("usage errors and the weight cap") {
    CHECK(run("").code == 2);
    CHECK(run("series --name nope --weight 2").code == 2);
    CHECK(run("series --name fc").code == 2);
    CHECK(run("enumerate --kind prime --weight -1").code == 2);
    CHECK(run("--help").code == 0);

    RunResult r = run("series --name fc --weight 11");
    CHECK(r.code == 2);
    CHECK(r.output.find("cap 10") != std::string::npos);

    r = run("series --name fc --weight 5", "SCT_MAX_WEIGHT=4");
    CHECK(r.code == 2);
    CHECK(r.output.find("cap 4") != std::string::npos);

    r = run("series --name fc --weight 5 --max-weight 4", "SCT_MAX_WEIGHT=9");
    CHECK(r.code == 2);
    CHECK(r.output.find("cap 4") != std::string::npos);

    CHECK(run("enumerate --kind prime --weight 11 --max-weight 11").code == 0);
    CHECK(run("series --name fc --weight 2", "SCT_MAX_WEIGHT=zzz").code == 2);
}

TEST_CASE("json output carries the text form") {
    RunResult r = run("series --name kappa --weight 2 --format json");
    CHECK(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["command"] == "series");
    CHECK(doc["params"]["weight"] == 2);
    CHECK(doc["result"]["text"] == "S[0] + S[1,0,0] + S[2,0,0,0] - S[1,1,0,0,0]");
    CHECK(doc.contains("version"));

    r = run("enumerate --kind all --weight 2 --format json");
    nlohmann::json e = nlohmann::json::parse(r.output);
    CHECK(e["result"]["count"] == 3);
    CHECK(e["result"]["trees"][0] == "2,0,0,0");

    r = run("verify --suite goldens --weight 3 --format json");
    nlohmann::json v = nlohmann::json::parse(r.output);
    CHECK(v["result"]["passed"] == v["result"]["total"]);
}
