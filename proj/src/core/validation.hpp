#pragma once

#include <string>

namespace semitoric {

// valid == true iff reason is empty; reason names the first violated
// condition in the order the validator checks them.
struct ValidationReport {
  bool valid = false;
  std::string reason;
};

}  // namespace semitoric
