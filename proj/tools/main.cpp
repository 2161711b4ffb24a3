#include "starhess/cli.hpp"

int main(int argc, char** argv) { return starhess::cli::run(argc, argv); }
