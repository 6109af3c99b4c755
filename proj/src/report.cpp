#include "lefschetz/report.hpp"

#include <iomanip>
#include <sstream>

namespace lefschetz {

using nlohmann::json;

bool Report::any_fail() const {
  for (const CheckRecord& c : checks)
    if (c.status == "fail") return true;
  return false;
}

json Report::to_json(bool include_timing) const {
  json j;
  j["tool"] = tool;
  j["version"] = version;
  j["instance_digest"] = instance_digest;
  j["seed"] = seed;
  json arr = json::array();
  for (const CheckRecord& c : checks) {
    json jc;
    jc["name"] = c.name;
    jc["params"] = c.params;
    jc["status"] = c.status;
    jc["data"] = c.data;
    if (include_timing) jc["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  return j;
}

std::string Report::structured(bool include_timing) const {
  return to_json(include_timing).dump(2) + "\n";
}

std::string Report::table() const {
  std::ostringstream os;
  os << tool << " " << version << "  instance " << instance_digest << "  seed " << seed << "\n";
  os << std::left << std::setw(18) << "check" << std::setw(14) << "status"
     << "summary\n";
  os << std::string(72, '-') << "\n";
  for (const CheckRecord& c : checks) {
    std::string summary;
    if (c.data.contains("summary"))
      summary = c.data["summary"].get<std::string>();
    else if (c.data.contains("note"))
      summary = c.data["note"].get<std::string>();
    os << std::left << std::setw(18) << c.name << std::setw(14) << c.status << summary << "\n";
    if (c.name == "hilbert" && c.data.contains("rows")) {
      os << "    " << std::setw(6) << "k" << std::setw(8) << "HF" << std::setw(8) << "koszul"
         << "match\n";
      for (const auto& row : c.data["rows"])
        os << "    " << std::setw(6) << row["k"].get<int>() << std::setw(8)
           << row["hf"].get<int>() << std::setw(8) << row["koszul"].get<std::int64_t>()
           << (row["match"].get<bool>() ? "yes" : "NO") << "\n";
    }
    if ((c.name == "wlp" || c.name == "slp") && c.data.contains("rows")) {
      os << "    " << std::setw(6) << "k" << std::setw(6) << "j" << std::setw(10) << "target"
         << std::setw(8) << "best" << std::setw(8) << "trials" << "verdict\n";
      for (const auto& row : c.data["rows"])
        os << "    " << std::setw(6) << row["k"].get<int>() << std::setw(6)
           << row["j"].get<int>() << std::setw(10) << row["target"].get<int>() << std::setw(8)
           << row["best"].get<int>() << std::setw(8) << row["trials_used"].get<int>()
           << row["verdict"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

}  // namespace lefschetz
