#include <iostream>

#include "gstark/verify.hpp"

int main(int argc, char** argv) { return gstark::verify_main(argc, argv, std::cout, std::cerr); }
