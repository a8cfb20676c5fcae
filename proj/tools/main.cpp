#include "hyplab/cli.hpp"

int main(int argc, char** argv) { return hyplab::run_cli(argc, argv); }
