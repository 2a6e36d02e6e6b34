#include "affembed/cli.hpp"

int main(int argc, char* argv[]) { return affembed::cli::run(argc, argv); }
