#include "hyperdeg/cli.hpp"

int main(int argc, char** argv) { return hyperdeg::cli::run_cli(argc, argv); }
