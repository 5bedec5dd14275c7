#include "tannaka/report.hpp"

namespace tannaka {

std::string CheckReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations_) {
    if (!out.empty()) out += "; ";
    out += v.check + ": " + v.message;
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Value& v = m.at(i, j);
      if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
        row.push_back(v.get_num().get_si());
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json violation_to_json(const Violation& v) {
  return json{{"check", v.check}, {"message", v.message}, {"witness", v.witness}};
}

json report_to_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& v : r.violations()) out.push_back(violation_to_json(v));
  return out;
}

}  // namespace tannaka
