#include "oak/cli.hpp"

int main(int argc, char** argv) { return oak::cli::run(argc, argv); }
