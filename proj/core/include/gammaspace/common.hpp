#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gammaspace/vendor/json.hpp>

namespace gs {

using json = nlohmann::json;

// Thrown when an enumeration exceeds its candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad references, failed invariants, out-of-range indices.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Resource limits other than the candidate budget (word-length cap, level bound).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
  std::uint64_t limit = 1'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit) {
      throw BudgetExceeded("candidate budget of " + std::to_string(limit) + " exceeded");
    }
  }
};

struct Config {
  int dim_bound = 4;
  int level_bound = 6;
  std::uint64_t budget = 1'000'000;
  int word_cap = 16;

  Budget make_budget() const { return Budget{budget, 0}; }
};

enum class Status { holds, fails, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

// Three-valued verdict. `tier` names the strength of the test, `range` the
// dimensions or levels actually covered.
struct Verdict {
  Status status = Status::holds;
  std::string tier;
  std::string range;
  std::string detail;
  json witness;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }

  json to_json() const {
    json j;
    j["status"] = to_string(status);
    j["tier"] = tier;
    j["range"] = range;
    if (!detail.empty()) j["detail"] = detail;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

// Combines verdicts conjunctively: any fail wins, then any inconclusive.
inline Status combine(Status a, Status b) {
  if (a == Status::fails || b == Status::fails) return Status::fails;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::holds;
}

}  // namespace gs
