#include "acre/run.hpp"

int main(int argc, char** argv) { return acre::cli_main(argc, argv); }
