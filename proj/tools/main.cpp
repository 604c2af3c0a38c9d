#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  polyadj::cli::Options options;
  if (const char* env = std::getenv("POLYADJ_THREADS")) {
    try {
      options.threads = static_cast<unsigned>(std::max(1L, std::stol(env)));
    } catch (const std::exception&) {
      std::cerr << "ignoring POLYADJ_THREADS=" << env << "\n";
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyadj::cli::run(args, std::cout, std::cerr, options);
}
