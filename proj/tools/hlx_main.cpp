#include <iostream>
#include <string>
#include <vector>

#include "hlx/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return hlx::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
