#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "mmv/numeval.hpp"

int main(int argc, char** argv) {
  // Reference literals and sums in the tests are formed at this precision;
  // evaluators set their own.
  mmv::Real::default_precision(80);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
