#include <string>
#include <vector>

#include "rfw_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rfw::cli::run(args);
}
