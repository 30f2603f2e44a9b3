#include <iostream>
#include <string>
#include <vector>

#include "cli.h"

int main(int argc, char** argv) {
  return toppkit::cli::Run(std::vector<std::string>(argv, argv + argc),
                           std::cout, std::cerr);
}
