#include <string>
#include <vector>

#include "cqed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cqed::cli::run(std::move(args));
}
