// Test plugin for the textual enclosure protocol: evaluates exp (orders 0
// and 1; order 2 is reported unsupported to exercise the fallback path).
// Usage: exp_plugin <order> <lo> <hi> <prec>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "cfpoly/bignum.hpp"
#include "cfpoly/interval.hpp"

using namespace cfpoly;

int main(int argc, char** argv) {
  if (argc != 5) {
    std::fprintf(stderr, "usage: %s <order> <lo> <hi> <prec>\n", argv[0]);
    return 2;
  }
  int order = std::atoi(argv[1]);
  if (order > 1) {
    std::printf("unsupported\n");
    return 0;
  }
  long prec = std::atol(argv[4]);
  BigNum lo = BigNum::from_string(argv[2], prec + 8, Rnd::Down);
  BigNum hi = BigNum::from_string(argv[3], prec + 8, Rnd::Up);
  IvBox out = iv_elem(IvFn::Exp, IvBox(lo, hi), prec + 8);
  int digits = static_cast<int>(prec * 0.3011 + 8);
  mpfr_printf("%.*RDe %.*RUe\n", digits, out.lo().raw(), digits,
              out.hi().raw());
  return 0;
}
