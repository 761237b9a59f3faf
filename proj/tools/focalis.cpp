// focalis command-line driver (placeholder; subcommands land with the engines)
#include <cstdio>
#include <string_view>

#include "focalis/version.hpp"

int main(int argc, char** argv) {
  if (argc > 1 && std::string_view(argv[1]) == "--version") {
    std::printf("focalis %s\n", FOCALIS_VERSION);
    return 0;
  }
  std::fprintf(stderr, "usage: focalis --version\n");
  return 3;
}
