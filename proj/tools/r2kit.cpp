#include "r2kit/cli.hpp"

int main(int argc, char** argv) { return r2kit::cli::run(argc, argv); }
