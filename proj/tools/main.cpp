#include "polycong/cli.hpp"

int main(int argc, char** argv) { return polycong::cli::run(argc, argv); }
