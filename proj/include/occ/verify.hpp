// Built-in verification suites: golden expectations for the constructions,
// the inversion machinery, the curve operations, and the ordinary-line
// deviation table, reported as named pass/fail checks.
#pragma once

#include <string>
#include <vector>

namespace occ {

struct VerifyCheck {
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<VerifyCheck> verify_constructions();
std::vector<VerifyCheck> verify_inversion();
std::vector<VerifyCheck> verify_curves();
std::vector<VerifyCheck> verify_theorem34();
// All four suites, in the order above.
std::vector<VerifyCheck> verify_all();

bool all_pass(const std::vector<VerifyCheck>& checks);

}  // namespace occ
