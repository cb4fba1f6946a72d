#include "fdeig/cli.hpp"

int main(int argc, char** argv) { return fdeig::run_cli(argc, argv); }
