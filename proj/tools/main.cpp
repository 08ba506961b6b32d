#include <iostream>

#include "dpo/cli.hpp"

int main(int argc, char** argv) {
  return dpo::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
