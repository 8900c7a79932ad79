#include "mlexp/cli.hpp"

int main(int argc, char** argv) { return mlexp::cli::main_entry(argc, argv); }
