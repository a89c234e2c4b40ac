// Walkthrough of the library on the Gaussian Liouville family: sequence
// values, certified digits, route agreement, a functional-equation residual,
// and the resultant hypothesis check.

#include <cstdio>

#include "cmgf/cmgf.hpp"

using namespace cmgf;

int main() {
  auto g = values_range(gaussian_liouville_spec(), 22);
  std::printf("g(1..22)      = ");
  for (int n = 1; n <= 22; ++n) std::printf("%d ", to_int(g[n]));
  std::printf("\n");

  std::printf("gamma bits    = 0.%s...\n", digits(gaussian_bits_gamma(), 21).c_str());

  GenFunSpec spec = genfun_gaussian();
  BigRational half(1, 2);
  Enclosure direct = eval_direct(spec, half, 64);
  Enclosure closed = eval_closed(spec, half, 6);
  std::printf("G(1/2) direct = [%s...]\n", direct.lo().to_decimal_string(20).c_str());
  std::printf("G(1/2) closed = [%s...]\n", closed.lo().to_decimal_string(20).c_str());
  std::printf("routes agree  = %s\n", direct.intersects(closed) ? "yes" : "NO");

  Enclosure residual = functional_equation_residual(spec, BigRational(1, 3), 80);
  std::printf("G(z^2)-G(z)+z/(1+z^2) at z=1/3 contains zero: %s (width < 2^-%ld)\n",
              residual.contains_zero() ? "yes" : "NO", *residual.width_bits());

  MahlerReport rep = check_mahler(mahler_gaussian_instance(half), 64);
  std::printf("hypotheses    : m=%u < d=%u, 0<|alpha|<1, Delta = %s nonvanishing: %s\n", rep.m,
              rep.d, to_string(rep.delta).c_str(), rep.pass() ? "certified" : "FAILED");
  return rep.pass() && residual.contains_zero() && direct.intersects(closed) ? 0 : 1;
}
