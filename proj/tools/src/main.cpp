#include <iostream>

#include "fresnel_cli/app.hpp"

int main(int argc, char** argv) { return fresnel::cli::run(argc, argv, std::cout, std::cerr); }
