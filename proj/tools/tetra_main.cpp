#include "tetra/cli.hpp"

int main(int argc, char** argv) { return tetra::cli::main(argc, argv); }
