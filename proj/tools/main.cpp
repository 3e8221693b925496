#include "volterra_app/cli.hpp"

int main(int argc, char** argv) { return volterra::app::cli_main(argc, argv); }
