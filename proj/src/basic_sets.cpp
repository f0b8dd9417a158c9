#include "symchar/basic_sets.hpp"

#include <algorithm>
#include <numeric>

namespace symchar {

namespace {

std::vector<std::size_t> iota_indices(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> idx(end - begin);
  std::iota(idx.begin(), idx.end(), begin);
  return idx;
}

std::vector<std::size_t> complement(std::span<const std::size_t> chosen, std::size_t size) {
  std::vector<char> taken(size, 0);
  for (std::size_t i : chosen) {
    if (i >= size) throw std::invalid_argument("index selection out of range");
    if (taken[i]) throw std::invalid_argument("index selection has duplicates");
    taken[i] = 1;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < size; ++i)
    if (!taken[i]) rest.push_back(i);
  return rest;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Integer product_of(const std::vector<Integer>& xs) {
  Integer p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

}  // namespace

Cut Cut::at(Partition alpha) {
  int n = alpha.size();
  return Cut{n, std::move(alpha)};
}

Cut Cut::parse(std::string_view text, int n) {
  if (text == "ALL") return top(n);
  Partition alpha = Partition::parse(text);
  if (alpha.size() != n) {
    throw std::invalid_argument("cut (" + alpha.str() + ") is not a partition of " + std::to_string(n));
  }
  return Cut{n, std::move(alpha)};
}

std::string Cut::str() const { return is_top() ? "ALL" : "(" + alpha->str() + ")"; }

std::size_t Cut::small_count(const std::vector<Partition>& labels) const {
  if (is_top()) return labels.size();
  return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), *alpha) - labels.begin());
}

std::vector<Cut> all_cuts(int n) {
  std::vector<Cut> cuts;
  for (auto& alpha : enumerate(n)) cuts.push_back(Cut{n, std::move(alpha)});
  cuts.push_back(Cut::top(n));
  return cuts;
}

SplitReport split(const CharTable& table, const Cut& cut) {
  if (cut.n != table.n) throw std::invalid_argument("cut and table have different n");
  if (cut.alpha && cut.alpha->size() != table.n) throw std::invalid_argument("cut is not a partition of n");
  const std::size_t size = table.size();
  const std::size_t s = cut.small_count(table.labels);
  SplitReport r{cut, s, {}, {}, {}, {}};
  r.x_small = table.values.block(0, s, 0, s);
  r.x_large = table.values.block(s, size - s, s, size - s);
  r.xbar_small = table.values.block(0, size, 0, s);
  r.xbar_large = table.values.block(0, size, s, size - s);
  return r;
}

JacobiResult jacobi_check(const IntMatrix& a, std::span<const Integer> z, std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols) {
  if (!a.is_square()) throw std::invalid_argument("jacobi_check: matrix is not square");
  if (z.size() != a.rows()) throw std::invalid_argument("jacobi_check: diagonal has wrong length");
  if (rows.size() != cols.size()) throw std::invalid_argument("jacobi_check: row and column selections differ in size");
  if (a.transpose() * a != IntMatrix::diagonal(z)) {
    throw std::invalid_argument("jacobi_check: A^t A is not the given diagonal matrix");
  }
  const std::size_t n = a.rows();
  std::vector<std::size_t> row_order(rows.begin(), rows.end());
  std::vector<std::size_t> col_order(cols.begin(), cols.end());
  const auto rest_rows = complement(rows, n);
  const auto rest_cols = complement(cols, n);
  row_order.insert(row_order.end(), rest_rows.begin(), rest_rows.end());
  col_order.insert(col_order.end(), rest_cols.begin(), rest_cols.end());

  std::vector<std::size_t> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[row_order[j]] = col_order[j];

  JacobiResult result;
  result.sign = permutation_sign(sigma);
  Integer delta = 1;
  for (std::size_t k : cols) delta *= z[k];
  result.lhs = det(a.select(rows, cols)) * det(a);
  result.rhs = result.sign * delta * det(a.select(rest_rows, rest_cols));
  return result;
}

DecompositionReport basic_set_test(const IntMatrix& xbar, std::span<const std::size_t> basis_rows) {
  if (basis_rows.size() != xbar.cols()) {
    throw std::invalid_argument("basic_set_test: basis size must equal the number of columns");
  }
  DecompositionReport report;
  report.basis_rows.assign(basis_rows.begin(), basis_rows.end());
  const auto others = complement(basis_rows, xbar.rows());
  const auto all_cols = iota_indices(0, xbar.cols());
  const IntMatrix basis = xbar.select(basis_rows, all_cols);
  if (det(basis) == 0) return report;
  report.d = solve_right(basis, xbar);
  report.d_hat = report.d->select(others, all_cols);
  report.is_basic = is_integral(*report.d);
  return report;
}

IntMatrix cartan_matrix(const DecompositionReport& report) {
  if (!report.is_basic || !report.d) throw std::invalid_argument("cartan_matrix: rows are not a basic set");
  IntMatrix d = *to_integral(*report.d);
  return d.transpose() * d;
}

bool duality_check(const DecompositionReport& small, const DecompositionReport& large) {
  if (!small.is_basic || !large.is_basic) return false;
  const std::size_t total = small.basis_rows.size() + large.basis_rows.size();
  if (small.d->rows() != total || large.d->rows() != total) return false;
  if (complement(small.basis_rows, total) != large.basis_rows) return false;

  const RatMatrix& dh = small.d_hat;
  if (dh != -large.d_hat.transpose()) return false;
  const IntMatrix d = *to_integral(dh);
  const IntMatrix c_small = cartan_matrix(small);
  const IntMatrix c_large = cartan_matrix(large);
  return c_small == IntMatrix::identity(d.cols()) + d.transpose() * d &&
         c_large == IntMatrix::identity(d.rows()) + d * d.transpose();
}

CartanReport cartan_report(const CharTable& table, const Cut& cut) {
  const SplitReport s = split(table, cut);
  const std::size_t size = table.size();
  CartanReport r;
  r.small = basic_set_test(s.xbar_small, iota_indices(0, s.small_count));
  r.large = basic_set_test(s.xbar_large, iota_indices(s.small_count, size));
  r.c_small = cartan_matrix(r.small);
  r.c_large = cartan_matrix(r.large);
  r.det_small = det(r.c_small);
  r.det_large = det(r.c_large);
  Integer a_small = 1;
  Integer b_small = 1;
  for (std::size_t i = 0; i < s.small_count; ++i) {
    const auto st = stats(table.labels[i]);
    a_small *= st.a;
    b_small *= st.b;
  }
  r.predicted = Rational(b_small, a_small);
  r.predicted.canonicalize();
  return r;
}

Verdict verify_cut(const CharTable& table, const Cut& cut) {
  Verdict v;
  v.subject = "S_" + std::to_string(table.n) + " cut " + cut.str();
  const SplitReport s = split(table, cut);
  const std::size_t size = table.size();

  std::vector<Integer> a_small, b_small, a_large, b_large;
  for (std::size_t i = 0; i < size; ++i) {
    const auto st = stats(table.labels[i]);
    (i < s.small_count ? a_small : a_large).push_back(st.a);
    (i < s.small_count ? b_small : b_large).push_back(st.b);
  }
  const Integer pa_small = product_of(a_small), pb_small = product_of(b_small);
  const Integer pa_large = product_of(a_large), pb_large = product_of(b_large);

  const Integer det_large = det(s.x_large);
  with(with(v.add("det_large", det_large == pb_large, "det X^(alpha) = prod_{mu >= alpha} b_mu"), "det",
            to_string(det_large)),
       "expected", to_string(pb_large));

  const SnfResult snf_large = snf(s.x_large);
  const SnfResult snf_b = snf_of_list(b_large);
  with(with(v.add("snf_large", snf_large == snf_b, "SNF(X^(alpha)) = S(b_mu, mu >= alpha)"), "snf", snf_large.str()),
       "expected", snf_b.str());

  const Integer det_small = det(s.x_small);
  Check& ds = v.add("det_small", det_small == pa_small, "det X_(alpha) = prod_{mu < alpha} a_mu");
  with(ds, "det", to_string(det_small));
  with(ds, "expected", to_string(pa_small));
  // Informational only: SNF(X_(alpha)) = S(a_mu) fails in general.
  with(ds, "snf_small", snf(s.x_small).str());

  const auto small = basic_set_test(s.xbar_small, iota_indices(0, s.small_count));
  const auto large = basic_set_test(s.xbar_large, iota_indices(s.small_count, size));
  v.add("basic_set_small", small.is_basic, "characters below alpha form a basic set on classes below alpha");
  v.add("basic_set_large", large.is_basic, "characters from alpha on form a basic set on classes from alpha on");

  const bool both = small.is_basic && large.is_basic;
  v.add("duality", both && duality_check(small, large),
        "d_ij = -d'_ji, C_(alpha) = E + D^t D, C^(alpha) = E + D D^t");

  Check& cd = v.add("cartan_det", false, "det C_(alpha) = b_(alpha)/a_(alpha) = a^(alpha)/b^(alpha) = det C^(alpha)");
  if (both) {
    const Integer c_small = det(cartan_matrix(small));
    const Integer c_large = det(cartan_matrix(large));
    const bool ok = c_small == c_large && c_small * pa_small == pb_small && pb_small * pb_large == pa_small * pa_large;
    cd.status = ok ? Status::Pass : Status::Fail;
    with(cd, "det_small", to_string(c_small));
    with(cd, "det_large", to_string(c_large));
  } else {
    with(cd, "reason", "basic set test failed");
  }
  Rational quotient(pb_small, pa_small);
  quotient.canonicalize();
  with(cd, "predicted", to_string(quotient));

  with(v.add("quotient_integral", mpz_divisible_p(pb_small.get_mpz_t(), pa_small.get_mpz_t()) != 0,
             "b_(alpha)/a_(alpha) is an integer"),
       "quotient", to_string(quotient));
  return v;
}

}  // namespace symchar
