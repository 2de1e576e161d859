#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::json;

namespace {

struct Run {
    std::string out;
    int code;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + TROPCRIT_CLI + std::string(" ") + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int st = pclose(p);
    return {out, WIFEXITED(st) ? WEXITSTATUS(st) : -1};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

std::vector<Json> json_lines(const std::string& s) {
    std::vector<Json> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

bool has_line(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("tropical fixture in both formats") {
    auto t = run("tropical --n 3 --weight 7,5,0");
    CHECK(t.code == 0);
    auto j = run("tropical --n 3 --weight 7,5,0 --format json");
    REQUIRE(j.code == 0);
    auto js = json_of(j);
    std::map<std::string, std::string> sigma;
    for (const auto& a : js["arrows"]) sigma[a["label"]] = a["sigma"];
    CHECK(sigma == std::map<std::string, std::string>{{"a", "1"}, {"b", "2"}, {"c", "1"}, {"d", "3"}, {"e", "2"}, {"f", "2"}});
    // every (label, sigma) pair shows up as a table row
    std::istringstream is(t.out);
    std::map<std::string, std::string> rows;
    for (std::string line; std::getline(is, line);) {
        std::istringstream ls(line);
        std::string label, tail, head, s;
        if (ls >> label >> tail >> head >> s && sigma.count(label)) rows[label] = s;
    }
    CHECK(rows == sigma);
}

TEST_CASE("conjecture fixture") {
    auto t = run("conjecture --n 3 --weight 2w1+5w2 --word 212");
    CHECK(t.code == 0);
    CHECK(has_line(t.out, "equal: true"));
    CHECK(has_line(t.out, "nu: (2,3,2)"));
    CHECK(has_line(t.out, "nu_vee: (2,3,2)"));
    auto j = json_of(run("conjecture --n 3 --weight 2w1+5w2 --word 212 --format json"));
    CHECK(j["equal"] == true);
    CHECK(j["nu"] == Json::array({2, 3, 2}));
    CHECK(j["nu_vee"] == Json::array({"2", "3", "2"}));
    CHECK(j["word"] == "212");
    CHECK(j["n"] == 3);
}

TEST_CASE("integral fixture prints the filling") {
    auto t = run("integral --n 3 --weight 6,3,-2");
    CHECK(t.code == 0);
    CHECK(has_line(t.out, "integral: false"));
    CHECK(has_line(t.out, "3/2"));
    CHECK(has_line(t.out, "13/6"));
    auto j = json_of(run("integral --n 3 --weight 6,3,-2 --format json"));
    CHECK(j["is_integral"] == false);
    std::vector<std::string> vals;
    for (const auto& e : j["filling"]["entries"]) vals.push_back(e["value"]);
    CHECK(vals == std::vector<std::string>{"3/2", "13/6", "13/6"});
}

TEST_CASE("other subcommands") {
    auto f = json_of(run("filling --weight 7,5,0 --format json"));
    CHECK(f["is_integral"] == true);
    auto c = json_of(run("chain --n 3 --weight 2w1+5w2 --format json"));
    CHECK(c["chain"].size() == 2);
    auto sp = json_of(run("string-polytope --n 3 --weight rho --word 212 --format json"));
    CHECK(sp["A"].size() == 6);
    CHECK(sp["b"].size() == 6);
    CHECK(sp["points"].size() == 8);
    auto nv = json_of(run("nu-vee --n 3 --weight 2w1+5w2 --word 212 --format json"));
    CHECK(nv["nu_vee"] == Json::array({"2", "3", "2"}));
    auto nvn = json_of(run("nu-vee --n 3 --weight 2w1+5w2 --word 212 --numeric --format json"));
    CHECK(nvn["nu_vee"] == nv["nu_vee"]);
    auto nu = json_of(run("nu --n 3 --weight 2w1+5w2 --word 212 --format json"));
    CHECK(nu["nu"] == Json::array({2, 3, 2}));
    auto ffl = json_of(run("ffl --weight 6,3,-2 --format json"));
    CHECK(ffl["inside"] == true);
    auto all = json_lines(run("conjecture --n 3 --weight 2w1+5w2 --format json").out);
    CHECK(all.size() == 2);
}

TEST_CASE("puiseux and the precision override") {
    auto j = json_of(run("puiseux --weight 3,1,0 --format json"));
    CHECK(j["K"] == 8);
    CHECK(j["residual"].get<double>() < 1e-9);
    for (const auto& a : j["arrows"])
        if (a["label"] == "b") {
            std::vector<Json> want{"1", "0", "-1/2", "0", "3/8", "0", "-5/16", "0", "35/128"};
            CHECK(a["recognized"] == Json(want));
        }
    auto k4 = json_of(run("puiseux --weight 3,1,0 --format json", "TROPCRIT_PRECISION=4"));
    CHECK(k4["K"] == 4);
    auto flag = json_of(run("puiseux --weight 3,1,0 --K 2 --format json", "TROPCRIT_PRECISION=4"));
    CHECK(flag["K"] == 2);
    CHECK(run("puiseux --weight 3,1,0", "TROPCRIT_PRECISION=abc").code == 2);
}

TEST_CASE("sweep emits JSON lines and a summary") {
    auto r = run("sweep --n 3 --bound 4 --format json");
    CHECK(r.code == 0);
    auto lines = json_lines(r.out);
    REQUIRE(!lines.empty());
    auto summary = lines.back();
    CHECK(summary["cases"] == 10);
    CHECK(summary["equal"] == 10);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i]["equal"] == true);
    auto t = run("sweep --n 3 --bound 4");
    CHECK(has_line(t.out, "cases 10, equal 10, unequal 0, unsupported 0"));
}

TEST_CASE("exit codes") {
    auto dom = run("conjecture --n 3 --weight 6,3,-2 --word 212 --format json");
    CHECK(dom.code == 1);
    CHECK(json_of(dom)["error"] == "NotIntegral");
    CHECK(run("tropical --weight 1,2").code == 2);
    CHECK(run("tropical --n 3 --weight 1,0").code == 2);
    CHECK(run("conjecture --n 3 --weight rho --word 123").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("tropical --n 3 --weight 7,5,0 --format xml").code == 2);
    CHECK(run("--help").code == 0);
}
