#include "commands.hpp"

int main(int argc, char** argv) { return qyt::cli::run(argc, argv); }
