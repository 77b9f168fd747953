// Decay rate and 1/e time of an electron emitting a 12.8 eV photon, with the
// closed form and the trace oracle side by side.

#include <cstdio>

#include "fdrate/fdrate.hpp"

int main() {
  using namespace fdrate;
  const UnitBridge units;
  for (double p : {0.0, 0.001, 0.01}) {
    const EmissionPoint point{0.51, p, 12.8};
    const auto closed = decay_rate_closed(point);
    const auto oracle = decay_rate_trace_oracle(point);
    std::printf("|p| = %-6g MeV  gamma = %.10e MeV  oracle = %.10e MeV  1/e time = %.4e s\n", p, closed.gamma(),
                oracle.gamma(), units.e_folding_time_s(closed.gamma()));
  }
}
