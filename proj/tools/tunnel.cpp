#include "tunnel/cli.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto inv = tunnel::cli::invoke(args);
    if (inv.exit_code == 0 && inv.output_path) {
        std::ofstream out(*inv.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << *inv.output_path << '\n';
            return 1;
        }
        out << inv.output;
        return 0;
    }
    std::cout << inv.output;
    return inv.exit_code;
}
