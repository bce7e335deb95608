#include <filesystem>
#include <iostream>

#include "knitfold/cli.hpp"
#include "support/fixtures.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: write_table1_fixtures <dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& f : knitfold::test_support::table1_bundle()) {
        knitfold::write_file_atomic(dir / f.name, f.content);
    }
    return 0;
}
