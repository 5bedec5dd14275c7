#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tannaka/matrix.hpp"

namespace tannaka {

using json = nlohmann::json;

// One failed axiom instance.  `witness` carries enough coordinates to replay it.
struct Violation {
  std::string check;
  std::string message;
  json witness = json::object();
};

class CheckReport {
 public:
  void fail(std::string check, std::string message, json witness = json::object()) {
    violations_.push_back({std::move(check), std::move(message), std::move(witness)});
  }
  void merge(const CheckReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  // True if some violation has the given check id.
  bool has(const std::string& check) const {
    for (const auto& v : violations_) {
      if (v.check == check) return true;
    }
    return false;
  }
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

json matrix_to_json(const Matrix& m);
json violation_to_json(const Violation& v);
json report_to_json(const CheckReport& r);

}  // namespace tannaka
