#include "symchar/verdict.hpp"

#include <algorithm>

namespace symchar {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

std::string_view to_string(Evidence e) { return e == Evidence::Proved ? "proved" : "observed"; }

bool Verdict::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

bool Verdict::passed(Evidence evidence) const {
  return std::none_of(checks.begin(), checks.end(),
                      [&](const Check& c) { return c.evidence == evidence && c.status == Status::Fail; });
}

const Check* Verdict::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace symchar
