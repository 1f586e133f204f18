#include <iostream>

#include "hecke/commands.hpp"

int main(int argc, char** argv) {
  return hecke::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
