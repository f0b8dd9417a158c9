#include "symchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace symchar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view text, std::string_view context) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw std::invalid_argument("malformed " + std::string(context) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') || (text.front() == '[' && text.back() == ']'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return Partition(parts);
  for (std::string_view term : split_commas(text)) {
    term = trim(term);
    std::size_t caret = term.find('^');
    int part = parse_positive(term.substr(0, caret), "partition term");
    int mult = caret == std::string_view::npos ? 1 : parse_positive(term.substr(caret + 1), "partition exponent");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend();) {
    auto run_end = std::find_if(it, parts_.rend(), [&](int p) { return p != *it; });
    if (!out.empty()) out += ',';
    out += std::to_string(*it);
    auto mult = std::distance(it, run_end);
    if (mult > 1) out += "^" + std::to_string(mult);
    it = run_end;
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

std::strong_ordering compare(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("compare: partitions of different sizes (" + std::to_string(lambda.size()) + " vs " +
                                std::to_string(mu.size()) + ")");
  }
  return lambda <=> mu;
}

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> m;
  for (int p : lambda.parts()) ++m[p];
  return m;
}

PartitionStats stats(const Partition& lambda) {
  PartitionStats s{1, 1, 1};
  for (auto [part, mult] : multiplicities(lambda)) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    s.a *= power;
    s.b *= factorial(static_cast<unsigned long>(mult));
  }
  s.z = s.a * s.b;
  return s;
}

bool is_k_bounded(const Partition& lambda, int k) { return lambda.largest() <= k; }

bool is_ell_regular(const Partition& lambda, int ell) {
  for (auto [part, mult] : multiplicities(lambda)) {
    if (mult >= ell) return false;
  }
  return true;
}

bool is_ell_class_regular(const Partition& lambda, int ell) {
  return std::none_of(lambda.parts().begin(), lambda.parts().end(), [&](int p) { return p % ell == 0; });
}

PartitionFlags predicates(const Partition& lambda, int ell, int k) {
  return {is_k_bounded(lambda, k), is_ell_regular(lambda, ell), is_ell_class_regular(lambda, ell)};
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sum_l = 0;
  int sum_m = 0;
  std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    sum_l += i < lambda.parts().size() ? lambda.parts()[i] : 0;
    sum_m += i < mu.parts().size() ? mu.parts()[i] : 0;
    if (sum_l < sum_m) return false;
  }
  return true;
}

PartSet PartSet::all() { return PartSet(Kind::All, 0, {}); }

PartSet PartSet::bounded(int k) {
  if (k < 1) throw std::invalid_argument("bounded part set needs k >= 1");
  return PartSet(Kind::Bounded, k, {});
}

PartSet PartSet::non_multiples(int ell) {
  if (ell < 2) throw std::invalid_argument("non-multiples part set needs ell >= 2");
  return PartSet(Kind::NonMultiples, ell, {});
}

PartSet PartSet::explicit_set(std::vector<int> members) {
  for (int m : members) {
    if (m <= 0) throw std::invalid_argument("explicit part set members must be positive");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return PartSet(Kind::Explicit, 0, std::move(members));
}

PartSet PartSet::parse(std::string_view text) {
  text = trim(text);
  if (text == "all") return all();
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("malformed part set: '" + std::string(text) + "'");
  std::string_view head = text.substr(0, colon);
  std::string_view tail = text.substr(colon + 1);
  if (head == "bounded") return bounded(parse_positive(tail, "bound"));
  if (head == "nonmult") return non_multiples(parse_positive(tail, "modulus"));
  if (head == "explicit") {
    std::vector<int> members;
    for (std::string_view term : split_commas(tail)) members.push_back(parse_positive(term, "part size"));
    return explicit_set(std::move(members));
  }
  throw std::invalid_argument("unknown part set kind: '" + std::string(head) + "'");
}

bool PartSet::contains(int part) const {
  if (part <= 0) return false;
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Bounded:
      return part <= param_;
    case Kind::NonMultiples:
      return part % param_ != 0;
    case Kind::Explicit:
      return std::binary_search(members_.begin(), members_.end(), part);
  }
  return false;
}

bool PartSet::is_p_divisible(int p) const {
  switch (kind_) {
    case Kind::All:
    case Kind::Bounded:
    case Kind::NonMultiples:
      return true;
    case Kind::Explicit:
      return std::all_of(members_.begin(), members_.end(), [&](int r) { return r % p != 0 || contains(r / p); });
  }
  return false;
}

bool PartSet::is_p_closed(int p, int horizon) const {
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Bounded:
      return false;
    case Kind::NonMultiples:
      // If p | ell then d = ell/p lies in S while pd = ell does not.
      return param_ % p != 0;
    case Kind::Explicit:
      return std::all_of(members_.begin(), members_.end(),
                         [&](int d) { return static_cast<long>(d) * p > horizon || contains(d * p); });
  }
  return false;
}

std::string PartSet::str() const {
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::Bounded:
      return "bounded:" + std::to_string(param_);
    case Kind::NonMultiples:
      return "nonmult:" + std::to_string(param_);
    case Kind::Explicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
      }
      return out;
    }
  }
  return {};
}

namespace {

// Fills slots [depth, ...) of buffer with parts <= max_part summing to remaining,
// choosing the next part in increasing order so output is ascending.
void descend(int remaining, int max_part, const PartSet& parts, std::vector<int>& buffer,
             const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(buffer));
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    if (!parts.contains(part)) continue;
    buffer.push_back(part);
    descend(remaining - part, part, parts, buffer, visit);
    buffer.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const PartSet& parts, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
  std::vector<int> buffer;
  descend(n, n, parts, buffer, visit);
}

std::vector<Partition> enumerate(int n, const PartSet& parts) {
  std::vector<Partition> out;
  for_each_partition(n, parts, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace symchar
