#include "iprox/cli.hpp"

int main(int argc, char** argv) { return iprox::run_cli(argc, argv); }
