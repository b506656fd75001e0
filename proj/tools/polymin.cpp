#include "commands.hpp"

int main(int argc, char** argv) { return polymin::cli::run(argc, argv); }
