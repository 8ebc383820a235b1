#include <iostream>
#include <string>
#include <vector>

#include "facelex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return facelex::cli::dispatch(args, std::cout, std::cerr);
}
