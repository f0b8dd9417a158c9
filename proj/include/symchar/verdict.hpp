#pragma once

#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symchar {

enum class Status { Pass, Fail, NotApplicable };

// Proved checks encode theorems; Observed checks record evidence for claims
// that are only conjectured, so a failure there is data, not a defect.
enum class Evidence { Proved, Observed };

std::string_view to_string(Status s);
std::string_view to_string(Evidence e);

struct Witness {
  std::string key;
  std::string value;
};

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string statement;
  std::vector<Witness> witnesses;
  Evidence evidence = Evidence::Proved;
};

struct Verdict {
  std::string subject;
  std::deque<Check> checks;  // deque: add() hands out references that must stay valid

  Check& add(std::string name, bool ok, std::string statement, Evidence evidence = Evidence::Proved) {
    checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(statement), {}, evidence});
    return checks.back();
  }
  Check& add_not_applicable(std::string name, std::string statement) {
    checks.push_back({std::move(name), Status::NotApplicable, std::move(statement), {}, Evidence::Proved});
    return checks.back();
  }

  // True iff no check failed.
  bool passed() const;
  bool passed(Evidence evidence) const;
  const Check* find(std::string_view name) const;
};

inline Check& with(Check& c, std::string key, std::string value) {
  c.witnesses.push_back({std::move(key), std::move(value)});
  return c;
}

}  // namespace symchar
