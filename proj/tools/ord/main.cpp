#include <iostream>
#include <string>
#include <vector>

#include "brwdec/acceptance.hpp"
#include "brwdec/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return brwdec::cli::run(args, std::cout, std::cerr, [](std::ostream& out) {
    auto results = brwdec::acceptance::run_all(brwdec::acceptance::Options{});
    return brwdec::acceptance::report(results, out) ? 0 : 1;
  });
}
