// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "lqi/cli.hpp"

int main(int argc, char** argv) { return lqi::cli::main_entry(argc, argv, std::cout, std::cerr); }
