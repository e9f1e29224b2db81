#pragma once

#include <string>
#include <vector>

namespace xns {

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The pinned regression suite: hand-checked values for the classes that
// exercise every corner of the library (pairing, chi, Cremona words,
// classification verdicts, obstructions, census counts, oracle dimensions).
std::vector<FixtureResult> run_fixtures();

}  // namespace xns
