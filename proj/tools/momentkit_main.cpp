#include "momentkit/cli.hpp"

int main(int argc, char** argv) { return momentkit::run_cli(argc, argv); }
