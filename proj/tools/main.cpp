#include "swg/cli.hpp"

int main(int argc, char** argv) { return swg::cli_main(argc, argv); }
