#include "qsuper/report.hpp"

#include <sstream>

namespace qsuper {

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

CheckResult& Report::add(std::string check, bool pass, std::optional<std::string> witness,
                         std::vector<std::pair<std::string, std::string>> params) {
  CheckResult r;
  r.check = std::move(check);
  r.pass = pass;
  if (!pass) r.witness = std::move(witness);
  r.params = std::move(params);
  checks.push_back(std::move(r));
  return checks.back();
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << name << ": " << (checks.size() - failures()) << "/" << checks.size() << " checks pass";
  if (auto* f = first_failure()) {
    os << "; first failure " << f->check;
    if (f->witness) os << " (" << *f->witness << ")";
  }
  return os.str();
}

}  // namespace qsuper
