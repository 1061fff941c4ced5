#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "arrstab/lattice_oracle.hpp"

int main(int argc, char** argv) {
  // Every Smith normal form computed anywhere in the tests carries a checked certificate.
  arrstab::set_snf_audit(true);
  doctest::Context context(argc, argv);
  return context.run();
}
