#include "flagorder/cli.hpp"

int main(int argc, char** argv) { return flagorder::run(argc, argv); }
