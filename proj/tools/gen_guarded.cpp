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


// Writes the bundled random guarded systems guarded_01.sys .. guarded_NN.sys.

#include <streamift/parser.hpp>
#include <streamift/random_systems.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

int main(int argc, char **argv)
{
    CLI::App app{"Generate random guarded polynomial systems"};
    std::string dir = "systems";
    std::size_t count = 10;
    std::uint64_t seed = 20260415;
    app.add_option("dir", dir, "output directory");
    app.add_option("--count", count, "number of systems");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    std::filesystem::create_directories(dir);
    for (std::size_t i = 1; i <= count; ++i) {
        streamift::RandomPolyShape shape;
        shape.n = 1 + i % 3;
        shape.max_degree = 3;
        shape.max_terms = 4;
        shape.coeff_bound = 3;
        const auto sys = streamift::random_guarded_system(rng, shape);
        std::ostringstream name;
        name << "guarded_" << std::setw(2) << std::setfill('0') << i << ".sys";
        const auto path = std::filesystem::path(dir) / name.str();
        std::ofstream out(path);
        out << "# random guarded system, seed " << seed << " #" << i << '\n' << streamift::format_system(sys);
        std::cout << path.string() << '\n';
    }
    return 0;
}
