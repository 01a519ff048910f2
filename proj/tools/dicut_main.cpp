#include "dicut/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const dicut::RunReport report = dicut::run(args, std::cin);
  std::cout << report.text();
  return report.exit_code;
}
