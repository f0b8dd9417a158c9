#include "symchar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symchar/basic_sets.hpp"
#include "symchar/cache.hpp"
#include "symchar/kschur.hpp"
#include "symchar/linalg.hpp"
#include "symchar/reg_sing.hpp"
#include "symchar/series.hpp"

namespace symchar::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  ordered_json machine = ordered_json::object();
  std::ostringstream human;
  std::ostringstream csv;
  bool passed = true;
};

std::vector<std::string> row_names(const std::vector<Partition>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back("[" + l.str() + "]");
  return out;
}

std::vector<std::string> col_names(const std::vector<Partition>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back("(" + l.str() + ")");
  return out;
}

std::vector<std::string> slice(const std::vector<std::string>& v, std::size_t begin, std::size_t end) {
  return std::vector<std::string>(v.begin() + static_cast<std::ptrdiff_t>(begin),
                                  v.begin() + static_cast<std::ptrdiff_t>(end));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

template <typename T>
void emit_matrix(Output& o, const std::string& name, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, const Matrix<T>& m) {
  ordered_json j;
  j["row_labels"] = rows;
  j["col_labels"] = cols;
  j["rows"] = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j["rows"].push_back(std::move(row));
  }
  o.machine["matrices"][name] = std::move(j);

  std::size_t label_w = 0;
  for (const auto& r : rows) label_w = std::max(label_w, r.size());
  std::vector<std::size_t> width(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    width[c] = cols[c].size();
    for (std::size_t r = 0; r < m.rows(); ++r) width[c] = std::max(width[c], to_string(m(r, c)).size());
  }
  o.human << name << " (" << m.rows() << "x" << m.cols() << ")\n";
  o.human << std::string(label_w, ' ');
  for (std::size_t c = 0; c < m.cols(); ++c) o.human << "  " << std::setw(static_cast<int>(width[c])) << cols[c];
  o.human << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    o.human << std::left << std::setw(static_cast<int>(label_w)) << rows[r] << std::right;
    for (std::size_t c = 0; c < m.cols(); ++c)
      o.human << "  " << std::setw(static_cast<int>(width[c])) << to_string(m(r, c));
    o.human << '\n';
  }
  o.human << '\n';

  o.csv << "# " << name << '\n' << "label";
  for (const auto& c : cols) o.csv << ',' << csv_field(c);
  o.csv << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    o.csv << csv_field(rows[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) o.csv << ',' << to_string(m(r, c));
    o.csv << '\n';
  }
}

void emit_verdict(Output& o, const Verdict& v) {
  ordered_json j;
  j["subject"] = v.subject;
  j["passed"] = v.passed();
  j["checks"] = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = std::string(to_string(c.status));
    cj["evidence"] = std::string(to_string(c.evidence));
    cj["statement"] = c.statement;
    cj["witnesses"] = ordered_json::object();
    for (const auto& w : c.witnesses) cj["witnesses"][w.key] = w.value;
    j["checks"].push_back(std::move(cj));
  }
  o.machine["verdicts"].push_back(std::move(j));

  o.human << v.subject << ": " << (v.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : v.checks) {
    o.human << "  [" << to_string(c.status) << "] " << c.name;
    if (c.evidence == Evidence::Observed) o.human << " (observed)";
    o.human << ": " << c.statement;
    for (const auto& w : c.witnesses) o.human << "; " << w.key << "=" << w.value;
    o.human << '\n';
  }

  if (o.csv.tellp() == 0) o.csv << "subject,check,status,evidence\n";
  for (const auto& c : v.checks) {
    o.csv << csv_field(v.subject) << ',' << c.name << ',' << to_string(c.status) << ',' << to_string(c.evidence)
          << '\n';
  }
  o.passed = o.passed && v.passed();
}

Verdict full_table_checks(const CharTable& x) {
  Verdict v;
  v.subject = "S_" + std::to_string(x.n) + " character table";
  const auto z = centralizer_orders(x.labels);
  v.add("orthogonality", x.values.transpose() * x.values == IntMatrix::diagonal(z), "X^t X = diag(z_mu)");
  Integer pa = 1, pb = 1;
  for (const auto& mu : x.labels) {
    const auto st = stats(mu);
    pa *= st.a;
    pb *= st.b;
  }
  const Integer d = det(x.values);
  with(with(v.add("det", d == pa && pa == pb, "det X = prod a_mu = prod b_mu"), "det", to_string(d)), "expected",
       to_string(pa));
  v.add("transition_unitriangular", transition_unitriangular_check(x, build_perm_table(x.n)),
        "permutation characters = T * X with T integral upper unitriangular");
  return v;
}

CharTable table_for(int n) { return load_or_build(n, default_cache_dir()); }

void cmd_table(Output& o, int n) {
  const CharTable x = table_for(n);
  o.machine["n"] = n;
  emit_matrix(o, "character_table", row_names(x.labels), col_names(x.labels), x.values);
}

void cmd_perm_table(Output& o, int n) {
  const PermTable p = build_perm_table(n);
  o.machine["n"] = n;
  emit_matrix(o, "permutation_table", row_names(p.labels), col_names(p.labels), p.values);
}

void cmd_split(Output& o, int n, const std::string& alpha) {
  const CharTable x = table_for(n);
  const Cut cut = Cut::parse(alpha, n);
  const SplitReport s = split(x, cut);
  const auto rows = row_names(x.labels);
  const auto cols = col_names(x.labels);
  const std::size_t k = s.small_count;
  const std::size_t size = x.size();
  o.machine["n"] = n;
  o.machine["alpha"] = cut.str();
  emit_matrix(o, "X_small", slice(rows, 0, k), slice(cols, 0, k), s.x_small);
  emit_matrix(o, "X_large", slice(rows, k, size), slice(cols, k, size), s.x_large);
  emit_matrix(o, "Xbar_small", rows, slice(cols, 0, k), s.xbar_small);
  emit_matrix(o, "Xbar_large", rows, slice(cols, k, size), s.xbar_large);
}

void cmd_verify(Output& o, int n, const std::string& alpha, bool all_alphas) {
  const CharTable x = table_for(n);
  o.machine["n"] = n;
  emit_verdict(o, full_table_checks(x));
  std::vector<Cut> cuts = all_alphas || alpha.empty() ? all_cuts(n) : std::vector<Cut>{Cut::parse(alpha, n)};
  for (const auto& cut : cuts) emit_verdict(o, verify_cut(x, cut));
}

void cmd_cartan(Output& o, int n, const std::string& alpha) {
  const CharTable x = table_for(n);
  const Cut cut = Cut::parse(alpha, n);
  const std::size_t k = cut.small_count(x.labels);
  const std::size_t size = x.size();
  const auto rows = row_names(x.labels);
  o.machine["n"] = n;
  o.machine["alpha"] = cut.str();

  Verdict v;
  v.subject = "S_" + std::to_string(n) + " Cartan matrices at cut " + cut.str();
  CartanReport r;
  try {
    r = cartan_report(x, cut);
  } catch (const std::invalid_argument& e) {
    with(v.add("basic_sets", false, "both sides of the cut give basic sets"), "reason", e.what());
    emit_verdict(o, v);
    return;
  }
  emit_matrix(o, "D_hat", slice(rows, k, size), slice(rows, 0, k), r.small.d_hat);
  emit_matrix(o, "D_hat_dual", slice(rows, 0, k), slice(rows, k, size), r.large.d_hat);
  emit_matrix(o, "C_small", slice(rows, 0, k), slice(rows, 0, k), r.c_small);
  emit_matrix(o, "C_large", slice(rows, k, size), slice(rows, k, size), r.c_large);
  o.machine["det_small"] = to_string(r.det_small);
  o.machine["det_large"] = to_string(r.det_large);
  o.machine["predicted"] = to_string(r.predicted);
  o.human << "det C_small = " << r.det_small << ", det C_large = " << r.det_large << ", b/a = " << to_string(r.predicted)
          << "\n\n";
  v.add("duality", duality_check(r.small, r.large), "d_ij = -d'_ji, C_(alpha) = E + D^t D, C^(alpha) = E + D D^t");
  with(with(v.add("cartan_det", r.det_small == r.det_large && Rational(r.det_small) == r.predicted,
                  "det C_(alpha) = det C^(alpha) = b_(alpha)/a_(alpha)"),
            "det_small", to_string(r.det_small)),
       "det_large", to_string(r.det_large));
  emit_verdict(o, v);
}

void cmd_genfun(Output& o, const std::string& set, int p, int order, bool check) {
  const PartSet parts = PartSet::parse(set);
  if (!is_prime(p)) throw UsageError("--prime " + std::to_string(p) + " is not prime");
  if (order < 0) throw UsageError("--order must be nonnegative");
  const TruncSeries ps = p_series(parts, order);
  const TruncSeries t = t_series(parts, order);
  const AbSeries ab = ab_series(parts, p, order);
  const std::vector<std::pair<std::string, TruncSeries>> series = {
      {"P", ps}, {"T", t}, {"L", l_series(parts, order)}, {"E", e_series(parts, p, order)},
      {"F", f_series(parts, p, order)}, {"A", ab.a}, {"B", ab.b}};
  o.machine["set"] = parts.str();
  o.machine["prime"] = p;
  o.machine["order"] = order;
  o.csv << "n";
  for (const auto& [name, s] : series) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
    o.machine["series"][name] = std::move(coeffs);
    o.human << name << ": " << s.str() << '\n';
    o.csv << ',' << name;
  }
  o.human << '\n';
  o.csv << '\n';
  for (int i = 0; i <= order; ++i) {
    o.csv << i;
    for (const auto& [name, s] : series) o.csv << ',' << s[i];
    o.csv << '\n';
  }
  if (check) {
    std::ostringstream keep;
    keep << o.csv.str();
    emit_verdict(o, verify_valuation_series(parts, p, order));
    // csv stays the coefficient table
    o.csv.str(keep.str());
    o.csv.seekp(0, std::ios::end);
  }
}

void cmd_regsing(Output& o, int n, int ell) {
  if (ell < 2) throw UsageError("L must be at least 2");
  const CharTable x = table_for(n);
  const RegSingTables t = regular_singular_tables(x, ell);
  const auto rows = row_names(x.labels);
  const auto cols = col_names(x.labels);
  auto pick = [](const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(names[i]);
    return out;
  };
  o.machine["n"] = n;
  o.machine["ell"] = ell;
  emit_matrix(o, "X_reg", pick(rows, t.reg_rows), pick(cols, t.creg_cols), t.x_reg);
  emit_matrix(o, "X_sing", pick(rows, t.sing_rows), pick(cols, t.csing_cols), t.x_sing);
  emit_verdict(o, verify_regular_singular(x, ell));
}

void cmd_kschur_verify(Output& o, const std::string& file) {
  const KTable t = load_ktable(file);
  o.machine["n"] = t.n;
  o.machine["k"] = t.k;
  emit_verdict(o, verify_transition_theorem(t, table_for(t.n)));
  emit_verdict(o, verify_dual_observations(t));
}

void cmd_kschur_fixture(Output& o, int n, int k, const std::string& file) {
  const KTable t = make_trivial_fixture(n, k);
  save_ktable(t, file);
  o.machine["n"] = n;
  o.machine["k"] = k;
  o.machine["file"] = file;
  o.human << "wrote k-table fixture n = " << n << ", k = " << k << " to " << file << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric-group character tables, cut submatrices, basic sets and Cartan determinants"};
  app.name("symchar");
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine", "csv"}));

  int n = 0;
  int second = 0;
  std::string alpha;
  std::string file;
  std::string set = "all";
  int prime = 0;
  int order = kDefaultSeriesOrder;
  bool all_alphas = false;
  bool check = false;

  auto* table = app.add_subcommand("table", "Character table of S_N");
  table->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  auto* perm = app.add_subcommand("perm-table", "Permutation character table of S_N");
  perm->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  auto* split_cmd = app.add_subcommand("split", "Submatrices below and above a cut");
  split_cmd->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  split_cmd->add_option("--alpha", alpha, "Cut partition or ALL")->required();
  auto* verify = app.add_subcommand("verify", "Check the determinant, Smith form and basic-set theorems");
  verify->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  auto* alpha_opt = verify->add_option("--alpha", alpha, "Cut partition or ALL");
  verify->add_flag("--all-alphas", all_alphas, "Check every cut (default)")->excludes(alpha_opt);
  auto* cartan = app.add_subcommand("cartan", "Decomposition and Cartan matrices for a cut");
  cartan->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  cartan->add_option("--alpha", alpha, "Cut partition or ALL")->required();
  auto* genfun = app.add_subcommand("genfun", "Partition and valuation generating series");
  genfun->add_option("--set", set, "all | bounded:K | nonmult:L | explicit:a,b,c");
  genfun->add_option("--prime", prime, "Prime p")->required();
  genfun->add_option("--order", order, "Truncation order");
  genfun->add_flag("--check", check, "Verify the series identities");
  auto* regsing = app.add_subcommand("regsing", "Regular and singular character tables");
  regsing->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  regsing->add_option("L", second)->required();
  auto* kschur = app.add_subcommand("kschur", "k-Schur transition table verification");
  kschur->require_subcommand(1);
  auto* kverify = kschur->add_subcommand("verify", "Verify a k-table file");
  kverify->add_option("FILE", file)->required();
  auto* kfixture = kschur->add_subcommand("fixture", "Write the k >= n fixture");
  kfixture->add_option("N", n)->required()->check(CLI::NonNegativeNumber);
  kfixture->add_option("K", second)->required()->check(CLI::PositiveNumber);
  kfixture->add_option("-o,--output", file, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPassed;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (*table) {
      cmd_table(o, n);
    } else if (*perm) {
      cmd_perm_table(o, n);
    } else if (*split_cmd) {
      cmd_split(o, n, alpha);
    } else if (*verify) {
      cmd_verify(o, n, alpha, all_alphas);
    } else if (*cartan) {
      cmd_cartan(o, n, alpha);
    } else if (*genfun) {
      cmd_genfun(o, set, prime, order, check);
    } else if (*regsing) {
      cmd_regsing(o, n, second);
    } else if (*kverify) {
      cmd_kschur_verify(o, file);
    } else if (*kfixture) {
      cmd_kschur_fixture(o, n, second, file);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  const double wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string command = app.get_subcommands().front()->get_name();
  if (*kschur) command += " " + kschur->get_subcommands().front()->get_name();
  if (format == "machine") {
    ordered_json report;
    report["format_version"] = 1;
    report["command"] = command;
    report["passed"] = o.passed;
    for (auto& [key, value] : o.machine.items()) report[key] = value;
    ordered_json doc;
    doc["report"] = std::move(report);
    doc["envelope"]["wall_time_ms"] = wall_ms;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << o.csv.str();
  } else {
    out << o.human.str();
  }
  return o.passed ? kAllPassed : kCheckFailed;
}

}  // namespace symchar::cli
