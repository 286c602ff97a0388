#pragma once

// Known misprints in the reference tables and worked examples, each paired
// with the value recomputed by this library.

#include <string>
#include <vector>

namespace gf2m {

struct ErrataEntry {
  std::string location;
  std::string quantity;
  std::string printed;
  std::string computed;
  std::string note;
};

// Computed values come from live field arithmetic, not from stored strings.
std::vector<ErrataEntry> errata_entries();

}  // namespace gf2m
