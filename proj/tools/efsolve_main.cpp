#include "efsolve/cli.hpp"

int main(int argc, char** argv) { return efsolve::run_cli(argc, argv); }
