#include <iostream>

#include "resurgentia/tools/cli.hpp"

int main(int argc, char** argv) { return resurgentia::tools::dispatch(argc, argv, std::cout, std::cerr); }
