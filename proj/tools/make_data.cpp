// Regenerates the constructible benchmark instances under a target
// directory: the Mycielski towers and the n-queens graphs whose published
// sizes and optima are reproducible from their definitions.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "colorsat/generators.hpp"
#include "colorsat/instance.hpp"

using namespace colorsat;

namespace {

void write_file(const std::filesystem::path& dir, const std::string& name, const Instance& inst,
                int expect_n, int expect_m) {
    if (inst.num_vertices() != expect_n || inst.num_edges() != expect_m) {
        std::cerr << name << ": generated size " << inst.num_vertices() << "/" << inst.num_edges()
                  << " does not match expected " << expect_n << "/" << expect_m << "\n";
        std::exit(1);
    }
    std::ofstream out(dir / (name + ".col"));
    out << "c " << name << " (" << expect_n << " vertices, " << expect_m << " edges)\n";
    out << write_dimacs(inst);
    std::cout << name << ".col written (" << expect_n << " vertices, " << expect_m << " edges)\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_data OUTPUT_DIR\n";
        return 1;
    }
    std::filesystem::path dir(argv[1]);
    std::filesystem::create_directories(dir);

    write_file(dir, "myciel3", mycielski_tower(3), 11, 20);
    write_file(dir, "myciel4", mycielski_tower(4), 23, 71);
    write_file(dir, "queen5_5", queen_graph(5), 25, 160);
    write_file(dir, "queen6_6", queen_graph(6), 36, 290);
    write_file(dir, "queen7_7", queen_graph(7), 49, 476);
    return 0;
}
