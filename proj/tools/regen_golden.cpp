// Rewrites tests/golden/artifacts_*.txt from the deterministic flow in
// tests/golden_flow.hpp. Run from the repository root after an intentional
// encoding change, then review the diff; the test suite compares against
// these files byte for byte.

#include <fstream>
#include <iostream>

#include "gridabe/bls12_381.hpp"
#include "gridabe/toy_pairing.hpp"
#include "golden_flow.hpp"

using namespace gridabe;

int main() {
  {
    std::ofstream out("tests/golden/artifacts_toy.txt");
    for (const auto& [name, bytes] : testsupport::golden_artifacts<ToySym>())
      out << name << "=" << hex_encode(bytes) << "\n";
  }
  {
    // full hex would run to hundreds of kilobytes; a digest pins the bytes
    // just as hard
    std::ofstream out("tests/golden/artifacts_bls.txt");
    for (const auto& [name, bytes] : testsupport::golden_artifacts<Bls12_381>())
      out << name << "=" << digest_hex(bytes) << "\n";
  }
  std::cout << "golden artifact files rewritten\n";
  return 0;
}
