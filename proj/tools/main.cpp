#include "jungmeb/io.hpp"

int main(int argc, char** argv) { return jungmeb::run_cli(argc, argv); }
