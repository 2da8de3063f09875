#include "gmapkit/cli.hpp"

int main(int argc, char** argv) { return gmapkit::cli::run(argc, argv); }
