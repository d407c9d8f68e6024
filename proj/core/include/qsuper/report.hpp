#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsuper {

// One verification outcome. Serialized by the tools as
// {check, params, status: "pass"|"fail", witness: string|null}.
struct CheckResult {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::optional<std::string> witness;
};

struct Report {
  std::string name;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;

  CheckResult& add(std::string check, bool pass, std::optional<std::string> witness = std::nullopt,
                   std::vector<std::pair<std::string, std::string>> params = {});
  void append(const Report& other);
  // first failing entry, for diagnostics
  const CheckResult* first_failure() const;
  std::string summary() const;
};

}  // namespace qsuper
