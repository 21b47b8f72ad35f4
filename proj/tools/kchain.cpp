#include <exception>
#include <iostream>

#include "kchain/harness/cli.hpp"

int main(int argc, char** argv) {
  try {
    return kchain::harness::run_cli(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "kchain: internal error: " << e.what() << '\n';
    return kchain::harness::kExitMismatch;
  }
}
