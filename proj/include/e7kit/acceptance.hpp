#pragma once

#include <string>
#include <vector>

#include "e7kit/json_io.hpp"

// The battery of checks the artifact must pass, each returning a
// machine-readable certificate. Numbers are stable identifiers.
namespace e7kit::acc {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  io::json certificate;
};

CriterionResult criterion(int number);

// All twelve, in order. fault_inject deliberately fails one criterion so
// harnesses can verify that failures propagate.
std::vector<CriterionResult> run_all(bool fault_inject = false);

}  // namespace e7kit::acc
