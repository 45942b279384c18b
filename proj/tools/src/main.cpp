#include "lrq/cli.hpp"

int main(int argc, char** argv) { return lrq::cli::run(argc, argv); }
