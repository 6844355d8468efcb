#include "weylgray_cli/cli.hpp"

int main(int argc, char** argv) { return weylgray::cli::run(argc, argv); }
