#include <iostream>

#include "cylrep/cli.hpp"

int main(int argc, char** argv) {
  return cylrep::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
