#include <iostream>

#include "fbr_cli/app.hpp"

int main(int argc, char** argv) { return fbr::cli::run(argc, argv, std::cout, std::cerr); }
