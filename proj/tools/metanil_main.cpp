#include "metanil/cli.hpp"

int main(int argc, char** argv) { return metanil::run_cli(argc, argv); }
