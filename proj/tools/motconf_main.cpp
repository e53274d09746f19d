#include "motconf/cli.hpp"

int main(int argc, char** argv) { return motconf::run_cli(argc, argv); }
