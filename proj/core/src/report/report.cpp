#include "faithcert/report/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace faithcert {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::precondition_error: return "precondition-error";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

Status status_from_string(std::string_view text) {
  for (Status s : {Status::pass, Status::fail, Status::inconclusive, Status::precondition_error, Status::skipped}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

void CertificateReport::append(const CertificateReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const CheckRecord* CertificateReport::find(std::string_view name) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckRecord& r) { return r.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

Status CertificateReport::verdict() const {
  bool error = false, inconclusive = false;
  for (const auto& c : checks_) {
    switch (c.status) {
      case Status::fail: return Status::fail;
      case Status::precondition_error: error = true; break;
      case Status::inconclusive: inconclusive = true; break;
      default: break;
    }
  }
  if (error) return Status::precondition_error;
  if (inconclusive) return Status::inconclusive;
  return Status::pass;
}

nlohmann::json to_json(const Scalar& s) { return s.to_string(); }

nlohmann::json to_json(std::span<const Scalar> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

nlohmann::json to_json(const Subspace& s) {
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(to_json(s.basis().row(i)));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

}  // namespace faithcert
