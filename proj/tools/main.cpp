#include "twosep/cli.hpp"

int main(int argc, char** argv) { return twosep::cli::main(argc, argv); }
