#include "json.hpp"
#include "jordan/report.hpp"

namespace jordan {

std::string report_to_json(const ValidatorReport& report) {
  nlohmann::ordered_json doc;
  doc["instance"] = report.instance;
  doc["axioms"] = nlohmann::ordered_json::array();
  for (const auto& a : report.axioms) {
    nlohmann::ordered_json entry;
    entry["name"] = a.name;
    entry["pass"] = a.pass;
    entry["checked"] = a.checked;
    entry["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : a.witnesses) {
      nlohmann::ordered_json wj;
      if (!w.basis.empty()) wj["basis"] = w.basis;
      wj["arguments"] = w.arguments;
      wj["discrepancy"] = w.discrepancy;
      entry["witnesses"].push_back(std::move(wj));
    }
    doc["axioms"].push_back(std::move(entry));
  }
  return doc.dump();
}

}  // namespace jordan
