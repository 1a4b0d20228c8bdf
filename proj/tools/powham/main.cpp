#include "powham_cli/cli.hpp"

int main(int argc, char** argv) { return powham::cli::dispatch(argc, argv); }
