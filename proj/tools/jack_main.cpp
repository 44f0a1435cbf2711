#include <iostream>

#include "jack_app.hpp"

int main(int argc, char** argv) {
    return jackpoly::run_jack_cli(argc, argv, std::cout, std::cerr);
}
