// Copyright 2026 The streamift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace
{

struct Run {
    int status;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(STREAMIFT_CLI) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) {
        out.append(buf, n);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sys(const std::string &name)
{
    return testing_support::system_path(name);
}

class TempFile
{
public:
    explicit TempFile(const std::string &content)
        : path_(std::filesystem::temp_directory_path()
                / ("streamift_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++) + ".sys"))
    {
        std::ofstream(path_) << content;
    }
    ~TempFile()
    {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile &) = delete;
    TempFile &operator=(const TempFile &) = delete;

    std::string path() const
    {
        return path_.string();
    }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

} // namespace

TEST_CASE("check")
{
    const Run trees = run("check " + sys("trees"));
    CHECK(trees.status == 0);
    CHECK(trees.out.find("det: 1\n") != std::string::npos);
    CHECK(trees.out.find("status: ok") != std::string::npos);

    const Run nz = run("check " + sys("nonzerod"));
    CHECK(nz.status == 0);
    CHECK(nz.out.find("det: 12\n") != std::string::npos);

    TempFile bad("vars: y\neqs: x^2 + y^2 - 1\ninit: 0\n");
    const Run circle0 = run("check " + bad.path());
    CHECK(circle0.status == 1);
    CHECK(circle0.out.find("status: fail") != std::string::npos);
    CHECK(run("sde " + bad.path()).status == 1);
}

TEST_CASE("errors and usage")
{
    TempFile broken("vars: y\neqs: y - (1 + x*y^2\ninit: 1\n");
    CHECK(run("check " + broken.path()).status == 2);
    CHECK(run("check /nonexistent/file.sys").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("frobnicate " + sys("trees")).status == 2);
    CHECK(run("coeffs " + sys("trees") + " -k -3").status == 2);
    CHECK(run("coeffs " + sys("trees") + " --method fast").status == 2);
    CHECK(run("check " + sys("trees") + " --order y1,y2").status == 2);
    CHECK(run("check " + sys("trees") + " --order y1,y2,q").status == 2);
}

TEST_CASE("sde")
{
    const Run cat = run("sde " + sys("catalan"));
    CHECK(cat.status == 0);
    CHECK(cat.out.find("y' = y^2") != std::string::npos);
    CHECK(cat.out.find("y(0) = 1") != std::string::npos);

    const Run circle = run("sde " + sys("circle"));
    CHECK(circle.status == 0);
    CHECK(circle.out.find("w' = 1/2*x*w^2") != std::string::npos);

    const Run trees = run("sde " + sys("trees"));
    REQUIRE(trees.status == 0);
    TempFile derived(trees.out);
    const Run again = run("coeffs " + derived.path() + " -k 8");
    CHECK(again.status == 0);
    CHECK(lines(again.out).at(0) == "y1: 0 1 0 0 4 16 56 256 1236");
}

TEST_CASE("coeffs")
{
    const Run trees = run("coeffs " + sys("trees") + " -k 8");
    CHECK(trees.status == 0);
    REQUIRE(lines(trees.out).size() == 3);
    CHECK(lines(trees.out)[0] == "y1: 0 1 0 0 4 16 56 256 1236");

    const Run both = run("coeffs " + sys("catalan") + " -k 9 --method both");
    CHECK(both.status == 0);
    CHECK(both.out == "y: 1 1 2 5 14 42 132 429 1430 4862\n");
    CHECK(run("coeffs " + sys("catalan") + " -k 9 --method ode").out == both.out);

    const Run zero = run("coeffs " + sys("nonzerod") + " -k 0");
    CHECK(zero.status == 0);
    for (const auto &l : lines(zero.out)) {
        CHECK(l.substr(l.find(':')) == ": 1");
    }

    const Run neg = run("coeffs " + sys("circle_neg") + " -k 6");
    CHECK(neg.out.find("1 0 1/2 0 1/8 0 1/16") != std::string::npos);

    const Run ordered = run("coeffs " + sys("trees") + " -k 8 --order y2,y3,y1");
    CHECK(ordered.status == 0);
    CHECK(ordered.out == trees.out);
}

TEST_CASE("compare and metric")
{
    const Run c = run("compare " + sys("circle") + " -k 40");
    CHECK(c.status == 0);
    CHECK(c.out == "agree through k=40\n");

    const Run m = run("metric " + sys("trees"));
    CHECK(m.status == 0);
    CHECK(m.out.find("stream_P=19") != std::string::npos);
    CHECK(m.out.find("classical_P=24") != std::string::npos);
}

TEST_CASE("bench csv")
{
    const Run b = run("bench " + sys("catalan") + " -k 10,20,30,40,50 --repeat 1");
    REQUIRE(b.status == 0);
    const auto rows = lines(b.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "system,method,k,seconds,P,S");
    std::size_t sde = 0;
    std::size_t ode = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::vector<std::string> f;
        std::istringstream in(rows[i]);
        for (std::string cell; std::getline(in, cell, ',');) {
            f.push_back(cell);
        }
        REQUIRE(f.size() == 6);
        CHECK(f[0] == "catalan");
        sde += f[1] == "sde-recurrence";
        ode += f[1] == "ode-series";
        CHECK(std::stod(f[3]) >= 0);
    }
    CHECK(sde == 5);
    CHECK(ode == 5);
    CHECK(run("bench " + sys("catalan") + " -k 20,10").status == 2);
    CHECK(run("bench " + sys("catalan") + " -k 10 --repeat 0").status == 2);
}
