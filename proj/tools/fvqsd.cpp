#include "fvqsd/cli.hpp"

int main(int argc, char** argv) { return fvqsd::cli::main(argc, argv); }
