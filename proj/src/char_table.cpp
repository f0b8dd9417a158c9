#include "symchar/char_table.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "symchar/linalg.hpp"

namespace symchar {

std::size_t LabeledTable::index_of(const Partition& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw std::out_of_range("label (" + label.str() + ") not in table");
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<Integer> centralizer_orders(const std::vector<Partition>& labels) {
  std::vector<Integer> z;
  z.reserve(labels.size());
  for (const auto& mu : labels) z.push_back(stats(mu).z);
  return z;
}

namespace {

// Evaluates chi^shape on the cycle type strips[depth..], memoized per depth.
// Shapes are handled through their beta-sets: removing a border strip of length r
// moves one bead from b to b - r onto an empty position, with sign (-1)^(beads jumped).
class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> strips) : strips_(std::move(strips)), memo_(strips_.size()) {}

  Integer value(const std::vector<int>& shape, std::size_t depth) {
    if (depth == strips_.size()) return shape.empty() ? 1 : 0;
    auto& cache = memo_[depth];
    if (auto it = cache.find(shape); it != cache.end()) return it->second;

    const int r = strips_[depth];
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);
    std::vector<char> occupied(beta.empty() ? 0 : beta.front() + 1, 0);
    for (int b : beta) occupied[b] = 1;

    Integer total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - r;
      if (target < 0 || occupied[target]) continue;
      int height = 0;
      for (int j = i + 1; j < len && beta[j] > target; ++j) ++height;

      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next;
      next.reserve(moved.size());
      for (int j = 0; j < len; ++j) {
        int part = moved[j] - (len - 1 - j);
        if (part > 0) next.push_back(part);
      }
      Integer sub = value(next, depth + 1);
      if (height % 2 == 0) {
        total += sub;
      } else {
        total -= sub;
      }
    }
    cache.emplace(shape, total);
    return total;
  }

 private:
  std::vector<int> strips_;
  std::vector<std::map<std::vector<int>, Integer>> memo_;
};

class CycleDistribution {
 public:
  explicit CycleDistribution(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  // caps: remaining row capacities, sorted decreasing.
  Integer count(const std::vector<int>& caps, std::size_t depth) {
    if (depth == cycles_.size()) return 1;
    auto key = std::make_pair(depth, caps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int c = cycles_[depth];
    Integer total = 0;
    for (std::size_t i = 0; i < caps.size();) {
      std::size_t run = i;
      while (run < caps.size() && caps[run] == caps[i]) ++run;
      if (caps[i] >= c) {
        std::vector<int> next = caps;
        next[i] -= c;
        std::sort(next.begin(), next.end(), std::greater<>());
        total += Integer(static_cast<unsigned long>(run - i)) * count(next, depth + 1);
      }
      i = run;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

void check_sizes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character value: |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.size()));
  }
}

void check_capacity(int n) {
  if (n < 0) throw std::invalid_argument("table order must be nonnegative");
  if (n > kMaxTableOrder) {
    throw CapacityError("table for n = " + std::to_string(n) + " exceeds the supported maximum n = " +
                        std::to_string(kMaxTableOrder));
  }
}

}  // namespace

Integer character_value(const Partition& lambda, const Partition& mu) {
  check_sizes(lambda, mu);
  MurnaghanNakayama mn(mu.parts());
  return mn.value(lambda.parts(), 0);
}

CharTable build_table(int n) {
  check_capacity(n);
  CharTable table;
  table.n = n;
  table.labels = enumerate(n);
  const std::size_t size = table.labels.size();
  table.values = IntMatrix(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    MurnaghanNakayama mn(table.labels[col].parts());
    for (std::size_t row = 0; row < size; ++row) table.values(row, col) = mn.value(table.labels[row].parts(), 0);
  }
  return table;
}

Integer permutation_value(const Partition& lambda, const Partition& mu) {
  check_sizes(lambda, mu);
  CycleDistribution dist(mu.parts());
  return dist.count(lambda.parts(), 0);
}

PermTable build_perm_table(int n) {
  check_capacity(n);
  PermTable table;
  table.n = n;
  table.labels = enumerate(n);
  const std::size_t size = table.labels.size();
  table.values = IntMatrix(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    CycleDistribution dist(table.labels[col].parts());
    for (std::size_t row = 0; row < size; ++row) table.values(row, col) = dist.count(table.labels[row].parts(), 0);
  }
  for (std::size_t row = 0; row < size; ++row) {
    if (table.values(row, row) != stats(table.labels[row]).b) {
      throw std::logic_error("permutation table diagonal differs from b_mu at (" + table.labels[row].str() + ")");
    }
    for (std::size_t col = row + 1; col < size; ++col) {
      if (table.values(row, col) != 0) throw std::logic_error("permutation table is not lower triangular");
    }
  }
  return table;
}

bool transition_unitriangular_check(const CharTable& chars, const PermTable& perm) {
  if (chars.n != perm.n || chars.labels != perm.labels) {
    throw std::invalid_argument("transition check: tables have different labels");
  }
  try {
    RatMatrix t = solve_right(chars.values, perm.values);
    return is_integral(t) && is_upper_unitriangular(t);
  } catch (const SingularMatrixError&) {
    return false;
  }
}

}  // namespace symchar
