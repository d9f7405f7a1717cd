#include <iostream>

#include "ipdhyp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ipd::cli_dispatch(args, std::cout, std::cerr);
}
