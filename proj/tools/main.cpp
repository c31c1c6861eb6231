#include "cli.hpp"

int main(int argc, char** argv) { return hlab::cli::run_cli(argc, argv); }
