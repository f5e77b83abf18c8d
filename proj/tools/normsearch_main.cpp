#include "normsearch/cli.hpp"

int main(int argc, char** argv) { return normsearch::cli::run(argc, argv); }
