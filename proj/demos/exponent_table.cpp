// Prints the low-side failure exponent in both forms next to the exact
// finite-n tail exponent.

#include <cstdio>

#include "uec/rates.hpp"

int main() {
  using namespace uec;
  const young::Spectrum p({0.75, 0.25});
  const double h = rates::shannon_entropy(p);
  std::printf("H(p) = %.6f bits\n", h);
  std::printf("%-6s %-12s %-12s %-12s %s\n", "R", "parametric", "primal", "bh", "tail n=2000");
  for (double r = 0.0; r < h; r += 0.1) {
    std::printf("%-6.2f %-12.6f %-12.6f %-12.6f %.6f\n", r, rates::exponent_parametric(r, p, rates::Side::Low),
                rates::exponent_primal(r, p, rates::Side::Low).exponent, rates::bh_exponent(r, p),
                rates::tail_probability(2000, 2, p, r, rates::Side::Low).exponent_estimate);
  }
}
