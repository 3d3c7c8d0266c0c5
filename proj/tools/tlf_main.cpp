#include "tlf/cli.hpp"

int main(int argc, char** argv) { return tlf::cli_main(argc, argv); }
