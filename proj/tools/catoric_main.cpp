#include "catoric/cli.hpp"

int main(int argc, char** argv) { return catoric::run_cli(argc, argv); }
