#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellroot/parity.hpp"

namespace ellroot {

// Flat `key = value` block; keys keep insertion order.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add_check(const CheckRecord& c);
  void append(const Report& other);

  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& lines() const { return lines_; }
  bool all_pass() const { return failures_ == 0; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  int checks_ = 0, failures_ = 0;
};

// "re,im" with 12 significant digits
std::string format_complex(wd::Complex z);
std::string format_coeffs(const std::vector<std::int64_t>& c);

Report local_data_report(const LocalData& d);
Report l_poly_report(const LPolynomial& L);
Report stability_report(const wd::WDRep& r, const wd::LocalFieldTag& tag, int n);
Report parity_block(const ParityReport& r);

}  // namespace ellroot
