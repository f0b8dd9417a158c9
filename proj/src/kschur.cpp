#include "symchar/kschur.hpp"

#include <fstream>
#include <sstream>

#include "symchar/linalg.hpp"
#include "table_json.hpp"

namespace symchar {

std::vector<Partition> k_bounded_partitions(int n, int k) { return enumerate(n, PartSet::bounded(k)); }

std::string to_json(const KTable& table) {
  return detail::write_table_document({{"format_version", kKTableFormatVersion}, {"n", table.n}, {"k", table.k}},
                                      table.labels, table.values);
}

KTable parse_ktable(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw KTableError(KTableErrorKind::Parse, std::string("k-table is not valid JSON: ") + e.what());
  }
  KTable t;
  std::vector<std::vector<Integer>> rows;
  try {
    if (!doc.is_object()) throw std::invalid_argument("top level must be an object");
    for (const char* key : {"format_version", "n", "k"}) {
      if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
      }
    }
    if (doc["format_version"].get<int>() != kKTableFormatVersion) {
      throw std::invalid_argument("unsupported format_version " + doc["format_version"].dump());
    }
    t.n = doc["n"].get<int>();
    t.k = doc["k"].get<int>();
    if (t.n < 0 || t.k < 1) throw std::invalid_argument("need n >= 0 and k >= 1");
    t.labels = detail::read_labels(doc);
    rows = detail::read_rows(doc);
  } catch (const std::invalid_argument& e) {
    throw KTableError(KTableErrorKind::Parse, std::string("malformed k-table: ") + e.what());
  }

  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw KTableError(KTableErrorKind::NotSquare, "k-table is not square: " + std::to_string(rows.size()) +
                                                        " rows but a row of length " + std::to_string(row.size()));
    }
  }
  const auto expected = k_bounded_partitions(t.n, t.k);
  if (rows.size() != expected.size() || t.labels.size() != expected.size()) {
    throw KTableError(KTableErrorKind::SizeMismatch,
                      "k-table for n = " + std::to_string(t.n) + ", k = " + std::to_string(t.k) + " needs " +
                          std::to_string(expected.size()) + " labels and rows, found " +
                          std::to_string(t.labels.size()) + " labels and " + std::to_string(rows.size()) + " rows");
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (t.labels[i] != expected[i]) {
      throw KTableError(KTableErrorKind::LabelMismatch, "label " + std::to_string(i) + " is (" + t.labels[i].str() +
                                                            "), expected (" + expected[i].str() + ")");
    }
  }
  t.values = IntMatrix(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) t.values(i, j) = rows[i][j];
  return t;
}

KTable load_ktable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KTableError(KTableErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ktable(buffer.str());
}

void save_ktable(const KTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw KTableError(KTableErrorKind::Io, "cannot write " + path.string());
  out << to_json(table);
  if (!out) throw KTableError(KTableErrorKind::Io, "write failed for " + path.string());
}

KTable make_trivial_fixture(int n, int k) {
  if (k < n) {
    throw std::invalid_argument("trivial fixture needs k >= n; genuine k-Schur tables for k < n must be supplied");
  }
  CharTable chars = build_table(n);
  return KTable{n, k, std::move(chars.labels), std::move(chars.values)};
}

KDualTable dual(const KTable& table) {
  // X^t Y = diag(z)  <=>  Y^t X = diag(z).
  const auto z = centralizer_orders(table.labels);
  const RatMatrix yt = solve_right(table.values, IntMatrix::diagonal(z));
  KDualTable d{table.n, table.k, table.labels, yt.transpose(), false};
  d.integral = is_integral(d.values);
  return d;
}

namespace {

std::vector<std::size_t> label_positions(const LabeledTable& chars, const std::vector<Partition>& labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(chars.index_of(l));
  return idx;
}

Integer product_a(const std::vector<Partition>& labels, std::size_t count) {
  Integer p = 1;
  for (std::size_t i = 0; i < count; ++i) p *= stats(labels[i]).a;
  return p;
}

// Nonzero off-diagonal entries only at (lambda, mu) with lambda dominating mu, unit diagonal.
bool dominance_unitriangular(const RatMatrix& t, const std::vector<Partition>& labels) {
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (i == j) {
        if (t(i, j) != 1) return false;
      } else if (t(i, j) != 0 && !dominates(labels[i], labels[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Verdict verify_transition_theorem(const KTable& table, const CharTable& chars) {
  if (chars.n != table.n) throw std::invalid_argument("character table and k-table have different n");
  Verdict v;
  v.subject = "k-table n = " + std::to_string(table.n) + ", k = " + std::to_string(table.k);
  const auto idx = label_positions(chars, table.labels);
  const IntMatrix restricted = chars.values.select(idx, idx);
  const std::size_t size = table.labels.size();

  Check& tri = v.add("transition_unitriangular", false,
                     "restricted character table = T * k-table with T integral lower unitriangular");
  try {
    const RatMatrix t = solve_right(table.values, restricted);
    const bool integral = is_integral(t);
    const bool lex = is_lower_unitriangular(t);
    tri.status = integral && lex ? Status::Pass : Status::Fail;
    with(tri, "integral", integral ? "true" : "false");
    if (!lex) with(tri, "dominance_unitriangular", dominance_unitriangular(t, table.labels) ? "true" : "false");
  } catch (const SingularMatrixError&) {
    with(tri, "reason", "k-table is singular");
  }

  const Integer det_k = det(table.values);
  const Integer det_x = det(restricted);
  const Integer expected = product_a(table.labels, size);
  with(with(with(v.add("det", det_k == expected && det_x == expected,
                       "det k-table = prod_{lambda in P^(k)} a_lambda = det X^(k)"),
                 "det_ktable", to_string(det_k)),
            "det_restricted", to_string(det_x)),
       "expected", to_string(expected));

  Check& blocks = v.add("principal_dets", true, "det of every block below alpha in P^(k) equals prod_{lambda < alpha} a_lambda");
  for (std::size_t s = 0; s < size; ++s) {
    const Integer want = product_a(table.labels, s);
    const Integer got_k = det(table.values.block(0, s, 0, s));
    const Integer got_x = det(restricted.block(0, s, 0, s));
    if (got_k != want || got_x != want) {
      blocks.status = Status::Fail;
      with(blocks, "first_failing_alpha", "(" + table.labels[s].str() + ")");
      with(blocks, "det_ktable", to_string(got_k));
      with(blocks, "det_restricted", to_string(got_x));
      with(blocks, "expected", to_string(want));
      break;
    }
  }
  return v;
}

Verdict verify_transition_theorem(const KTable& table) { return verify_transition_theorem(table, build_table(table.n)); }

Verdict verify_dual_observations(const KTable& table) {
  Verdict v;
  v.subject = "dual k-table n = " + std::to_string(table.n) + ", k = " + std::to_string(table.k);
  const std::size_t size = table.labels.size();
  std::vector<Integer> b;
  for (const auto& l : table.labels) b.push_back(stats(l).b);
  Integer b_product = 1;
  for (const auto& x : b) b_product *= x;

  KDualTable d;
  try {
    d = dual(table);
  } catch (const SingularMatrixError&) {
    for (const char* name : {"duality_product", "dual_det"}) with(v.add(name, false, "dual table"), "reason", "k-table is singular");
    for (const char* name : {"dual_integral", "dual_snf", "dual_snf_blocks"})
      with(v.add(name, false, "dual table", Evidence::Observed), "reason", "k-table is singular");
    return v;
  }

  const auto z = centralizer_orders(table.labels);
  v.add("duality_product", to_rational(table.values).transpose() * d.values == to_rational(IntMatrix::diagonal(z)),
        "k-table^t * dual = diag(z_lambda)");
  const Rational det_dual = det(d.values);
  with(with(v.add("dual_det", det_dual == b_product, "det dual = prod_{lambda in P^(k)} b_lambda"), "det",
            to_string(det_dual)),
       "expected", to_string(b_product));

  v.add("dual_integral", d.integral, "dual table has integer entries", Evidence::Observed);

  Check& full = v.add("dual_snf", false, "SNF(dual) = S(b_lambda, lambda in P^(k))", Evidence::Observed);
  Check& blocks =
      v.add("dual_snf_blocks", false, "SNF of the lower block from alpha = S(b_lambda, lambda >= alpha)", Evidence::Observed);
  if (!d.integral) {
    with(full, "reason", "dual table is not integral");
    with(blocks, "reason", "dual table is not integral");
    return v;
  }
  const IntMatrix y = *to_integral(d.values);
  const SnfResult got = snf(y);
  const SnfResult want = snf_of_list(b);
  full.status = got == want ? Status::Pass : Status::Fail;
  with(with(full, "snf", got.str()), "expected", want.str());

  blocks.status = Status::Pass;
  for (std::size_t s = 0; s < size; ++s) {
    const SnfResult block = snf(y.block(s, size - s, s, size - s));
    const SnfResult expected = snf_of_list(std::span<const Integer>(b).subspan(s));
    if (block != expected) {
      blocks.status = Status::Fail;
      with(blocks, "first_failing_alpha", "(" + table.labels[s].str() + ")");
      with(blocks, "snf", block.str());
      with(blocks, "expected", expected.str());
      break;
    }
  }
  return v;
}

}  // namespace symchar
