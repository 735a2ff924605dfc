#include <iostream>
#include <string>
#include <vector>

#include "wonderful/cli.hpp"

int main(int argc, char** argv) {
  return wonderful::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
