#include <iostream>

#include "nfold_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nfold::app::run(args, std::cout);
}
