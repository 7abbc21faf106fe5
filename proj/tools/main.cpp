#include "nrb/cli.hpp"

int main(int argc, char** argv) { return nrb::run_cli(argc, argv); }
