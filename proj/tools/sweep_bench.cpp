// Wall-time comparison of the serial and parallel sweep kernels. The two
// execution orders must produce identical reports; a mismatch is flagged.
#include <cstdio>

#include "sylowscope/sweeps.hpp"

int main() {
  using namespace sylow;
  struct Case {
    const char* name;
    SweepReport (*fn)(RunMode);
  };
  const Case cases[] = {
      {"cyclotomic", sweep_cyclotomic},
      {"valuation", sweep_valuation},
      {"orders/equality", sweep_order_equality},
      {"orders/r-part", sweep_rpart},
  };
  std::printf("%-18s %12s %12s %9s\n", "kernel", "serial (s)", "parallel (s)",
              "speedup");
  int mismatches = 0;
  for (const Case& c : cases) {
    const SweepReport serial = c.fn(RunMode::Serial);
    const SweepReport parallel = c.fn(RunMode::Parallel);
    const bool same = serial.checked == parallel.checked &&
                      serial.failures == parallel.failures &&
                      serial.findings == parallel.findings;
    if (!same) ++mismatches;
    std::printf("%-18s %12.3f %12.3f %8.2fx%s\n", c.name, serial.seconds,
                parallel.seconds,
                parallel.seconds > 0.0 ? serial.seconds / parallel.seconds
                                       : 0.0,
                same ? "" : "  (MISMATCH)");
  }
  return mismatches == 0 ? 0 : 1;
}
