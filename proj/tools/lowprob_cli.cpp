#include <iostream>

#include "lowprob/cli.hpp"

int main(int argc, char** argv) {
  return lowprob::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
