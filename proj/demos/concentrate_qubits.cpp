// Concentrates n copies of a two-qubit pure state with the exact simulator and
// compares each block against the closed-form probability.

#include <cstdio>

#include "uec/exact.hpp"
#include "uec/young.hpp"

int main() {
  using namespace uec;
  const young::Spectrum p({0.75, 0.25});
  const int n = 4;
  const auto state = exact::build_input_state(p, n);
  std::printf("n = %d copies of sqrt(0.75)|00> + sqrt(0.25)|11>\n", n);
  std::printf("%-10s %-10s %-10s %-6s %s\n", "shape", "P(exact)", "P(closed)", "Bell", "fidelity");
  for (const auto& o : exact::concentrate(state)) {
    std::printf("%-10s %-10.6f %-10.6f %-6d %.12f\n", o.shape.to_string().c_str(), o.probability,
                young::schur_weyl_prob(o.shape, p), o.bell_size, o.fidelity);
  }
}
