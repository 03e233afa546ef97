#pragma once

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "faithcert/linalg/subspace.hpp"

namespace faithcert {

enum class Status { pass, fail, inconclusive, precondition_error, skipped };

std::string_view to_string(Status status);
Status status_from_string(std::string_view text);

/// One verified (or refuted) statement with the data that backs it.
struct CheckRecord {
  std::string name;
  std::string anchor;  // the statement being certified, e.g. "ann_U ybar^n = U(x-n)"
  Status status = Status::pass;
  nlohmann::json data = nlohmann::json::object();
  double elapsed_ms = 0.0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Ordered list of check records. The verdict is derived: fail beats
/// precondition-error beats inconclusive beats pass; skipped records are
/// ignored, and an empty report passes.
class CertificateReport {
 public:
  void add(CheckRecord record) { checks_.push_back(std::move(record)); }
  void append(const CertificateReport& other);

  const std::vector<CheckRecord>& checks() const { return checks_; }
  std::vector<CheckRecord>& checks() { return checks_; }
  const CheckRecord* find(std::string_view name) const;
  Status verdict() const;
  bool passed() const { return verdict() == Status::pass; }

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;

 private:
  std::vector<CheckRecord> checks_;
};

/// Times `body`, which returns a CheckRecord, and stores the elapsed time.
template <typename Body>
CheckRecord timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord record = body();
  record.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

// Serialization helpers: scalars travel as "num/den" strings.
nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(std::span<const Scalar> v);
nlohmann::json to_json(const Subspace& s);

}  // namespace faithcert
