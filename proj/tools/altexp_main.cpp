#include <iostream>
#include <string>
#include <vector>

#include "altexp/cli.hpp"

int main(int argc, char** argv) {
  return altexp::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
