#include <iostream>

#include "app/commands.hpp"

int main(int argc, char** argv) { return toricfano::cli::run(argc, argv, std::cout, std::cerr); }
