#include "homrates/cli.hpp"

int main(int argc, char** argv) { return homrates::run_cli(argc, argv); }
