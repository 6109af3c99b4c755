#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lefschetz {

// One executed check: name, parameters, verdict and a structured payload.
// Payloads hold only integers, booleans and strings so that reports are
// byte-reproducible; elapsed_ms is the only non-deterministic field.
struct CheckRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::string status;  // pass | fail | inconclusive | degenerate
  nlohmann::json data = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;
};

struct Report {
  std::string tool = "lefschetz-lab";
  std::string version = "0.1.0";
  std::string instance_digest;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  bool any_fail() const;
  nlohmann::json to_json(bool include_timing = true) const;
  std::string structured(bool include_timing = true) const;
  std::string table() const;
};

}  // namespace lefschetz
