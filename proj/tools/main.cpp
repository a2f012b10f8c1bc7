#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return metric_ripple::cli::run(argc, argv, std::cout, std::cerr);
}
