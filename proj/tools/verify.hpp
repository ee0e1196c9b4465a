#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gehrhart/matroid.hpp"

namespace gehrhart::cli {

enum class Status { kPass, kFail, kSkipped };

struct CheckOutcome {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

std::string to_string(Status s);

/// Every cross-oracle check for 1 <= m <= m_max. Throws UnimodularityError
/// for non-unimodular input. Checks whose size guards would trip are skipped.
std::vector<CheckOutcome> verify_suite(const RealizedMatroid& m, std::int64_t m_max);

}  // namespace gehrhart::cli
