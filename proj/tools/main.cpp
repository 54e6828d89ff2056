#include "lsobstruct/cli.hpp"

int main(int argc, char** argv) { return lsobstruct::run_cli(argc, argv); }
