#include <iostream>

#include "scottperm_app.hpp"

int main(int argc, char** argv) {
  return scottperm::run_app(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
