// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "s5.hpp"
#include "symchar/basic_sets.hpp"
#include "symchar/cache.hpp"
#include "symchar/cli.hpp"
#include "symchar/kschur.hpp"
#include "symchar/linalg.hpp"
#include "symchar/reg_sing.hpp"
#include "symchar/series.hpp"

using namespace symchar;
namespace fs = std::filesystem;

namespace {

// Collects failure notes for one criterion.
struct Criterion {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 10) failures.push_back(what);
  }
};

int cli_run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

IntMatrix matrix_from_json(const nlohmann::json& m) {
  const auto& rows = m.at("rows");
  IntMatrix r(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = Integer(rows[i][j].get<std::string>());
  return r;
}

fs::path cache_dir() {
  const auto dir = default_cache_dir().value_or(fs::temp_directory_path() / "symchar-acceptance");
  fs::create_directories(dir);
  return dir;
}

// --- 1 ---
void s5_ground_truth(Criterion& c) {
  std::string out;
  c.expect(cli_run({"table", "5", "--format", "machine"}, &out) == 0, "table 5 exit code");
  auto doc = nlohmann::json::parse(out);
  c.expect(matrix_from_json(doc["report"]["matrices"]["character_table"]) == kS5Table, "table 5 values");

  c.expect(cli_run({"split", "5", "--alpha", "1^2,3", "--format", "machine"}, &out) == 0, "split exit code");
  doc = nlohmann::json::parse(out);
  const IntMatrix small = matrix_from_json(doc["report"]["matrices"]["X_small"]);
  const IntMatrix large = matrix_from_json(doc["report"]["matrices"]["X_large"]);
  c.expect(small == kS5Small, "A_(3)");
  c.expect(large == kS5Large, "A^(3)");

  c.expect(cli_run({"cartan", "5", "--alpha", "1^2,3", "--format", "machine"}, &out) == 0, "cartan exit code");
  doc = nlohmann::json::parse(out);
  const auto& m = doc["report"]["matrices"];
  c.expect(matrix_from_json(m["D_hat"]) == kS5DHat, "D_hat");
  c.expect(matrix_from_json(m["D_hat_dual"]) == kS5DualBlock, "dual block");
  c.expect(kS5DualBlock == -kS5DHat.transpose(), "d_ij = -d'_ji");
  c.expect(matrix_from_json(m["C_small"]) == kS5CSmall, "C_(3)");
  c.expect(matrix_from_json(m["C_large"]) == kS5CLarge, "C^(3)");
  c.expect(doc["report"]["det_small"] == "180" && doc["report"]["det_large"] == "180", "det C = 180");

  c.expect(det(small) == 8, "det X_(alpha) = 8");
  c.expect(det(large) == 2, "det X^(alpha) = 2");
  c.expect(snf(large).str() == "(1,1,1,2)", "SNF large");
  c.expect(snf(small).str() == "(1,2,4)", "SNF small");
}

// --- 2 ---
void cut_sweep(Criterion& c) {
  for (int n = 0; n <= 9; ++n) {
    const CharTable x = load_or_build(n, cache_dir());
    for (const Cut& cut : all_cuts(n)) {
      const std::string tag = "n=" + std::to_string(n) + " cut " + cut.str() + ": ";
      Integer prod_a_small = 1, prod_b_small = 1, prod_b_large = 1;
      std::vector<Integer> b_large;
      for (const auto& mu : x.labels) {
        const auto st = stats(mu);
        if (cut.is_small(mu)) {
          prod_a_small *= st.a;
          prod_b_small *= st.b;
        } else {
          prod_b_large *= st.b;
          b_large.push_back(st.b);
        }
      }
      const SplitReport s = split(x, cut);
      c.expect(det(s.x_small) == prod_a_small, tag + "det small");
      c.expect(det(s.x_large) == prod_b_large, tag + "det large");
      c.expect(snf(s.x_large) == snf_of_list(b_large), tag + "snf large");

      std::vector<std::size_t> small_rows(s.small_count), large_rows(x.size() - s.small_count);
      std::iota(small_rows.begin(), small_rows.end(), 0);
      std::iota(large_rows.begin(), large_rows.end(), s.small_count);
      const auto bs = basic_set_test(s.xbar_small, small_rows);
      const auto bl = basic_set_test(s.xbar_large, large_rows);
      c.expect(bs.is_basic && bl.is_basic, tag + "basic sets");
      if (!bs.is_basic || !bl.is_basic) continue;

      const Integer cs = det(cartan_matrix(bs));
      const Integer cl = det(cartan_matrix(bl));
      c.expect(mpz_divisible_p(prod_b_small.get_mpz_t(), prod_a_small.get_mpz_t()) != 0, tag + "b/a integral");
      const Integer quotient = prod_b_small / prod_a_small;
      c.expect(cs == quotient && cl == quotient, tag + "det C = b/a");
    }
  }
}

// --- 3 ---
void jacobi(Criterion& c) {
  std::mt19937 rng(20240601);
  int done = 0;
  for (int n = 4; n <= 8; ++n) {
    const CharTable x = load_or_build(n, cache_dir());
    const auto z = centralizer_orders(x.labels);
    for (int trial = 0; trial < 40; ++trial, ++done) {
      std::vector<std::size_t> all(x.size());
      std::iota(all.begin(), all.end(), 0);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(1, x.size() - 1)(rng);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<std::size_t> rows(all.begin(), all.begin() + static_cast<long>(k));
      std::vector<std::size_t> cols = rows;
      if (trial % 2) {
        std::shuffle(all.begin(), all.end(), rng);
        cols.assign(all.begin(), all.begin() + static_cast<long>(k));
      }
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      c.expect(jacobi_check(x.values, z, rows, cols).holds(), "n=" + std::to_string(n) + " trial " + std::to_string(trial));
    }
  }
  c.expect(done == 200, "200 selections");
}

// --- 4 ---
void series(Criterion& c) {
  const int order = 40;
  std::vector<PartSet> sets = {PartSet::all()};
  for (int k = 1; k <= 5; ++k) sets.push_back(PartSet::bounded(k));
  for (int ell : {2, 3, 4, 6}) sets.push_back(PartSet::non_multiples(ell));
  for (const auto& s : sets) {
    const TruncSeries ps = p_series(s, order);
    const TruncSeries t = t_series(s, order);
    c.expect(l_series(s, order) == ps * t, s.str() + ": L = P T");
    c.expect(l_series_direct(s, order) == ps * t, s.str() + ": L by part counting");
    for (int p : {2, 3, 5}) {
      const std::string tag = s.str() + ", p=" + std::to_string(p) + ": ";
      const AbSeries ab = ab_series(s, p, order);
      c.expect(ab.a == ps * e_series(s, p, order), tag + "A = P E");
      c.expect(ab.b == ps * f_series(s, p, order), tag + "B = P F");
      const bool divisible = s.is_p_divisible(p);
      const bool closed = divisible && s.is_p_closed(p, order);
      for (int n = 0; n <= order; ++n) {
        if (divisible) c.expect(ab.a[n] <= ab.b[n], tag + "A <= B at " + std::to_string(n));
        if (closed) c.expect(ab.a[n] == ab.b[n], tag + "A = B at " + std::to_string(n));
      }
      for (int n = 0; n <= 30; ++n) {
        const auto d = direct_valuations(n, s, p);
        c.expect(ab.a[n] == d.nu_a && ab.b[n] == d.nu_b, tag + "direct valuations at " + std::to_string(n));
      }
      c.expect(verify_valuation_series(s, p, order, 30).passed(), tag + "verdict");
    }
  }
  for (int n = 0; n <= 30; ++n) {
    const auto d = direct_valuations(n, PartSet::all(), 2);
    c.expect(d.a_product == d.b_product, "a_P(n) = b_P(n) at " + std::to_string(n));
  }
}

// --- 5 ---
void regular_singular(Criterion& c) {
  for (int n = 0; n <= 9; ++n) {
    const CharTable x = load_or_build(n, cache_dir());
    for (int ell = 2; ell <= 6; ++ell) {
      const std::string tag = "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": ";
      const RegSingTables t = regular_singular_tables(x, ell);
      c.expect(t.x_reg.rows() == t.x_reg.cols() && t.x_sing.rows() == t.x_sing.cols(), tag + "square");
      Integer a = 1, b = 1, b_reg = 1;
      for (auto j : t.creg_cols) {
        a *= stats(x.labels[j]).a;
        b_reg *= stats(x.labels[j]).b;
      }
      for (auto j : t.csing_cols) b *= stats(x.labels[j]).b;
      c.expect(abs(det(t.x_reg)) == a, tag + "det reg");
      c.expect(abs(det(t.x_sing)) == b, tag + "det sing");
      c.expect(mpz_divisible_p(b_reg.get_mpz_t(), a.get_mpz_t()) != 0, tag + "quotient integral");
      const Integer q = b_reg / a;
      c.expect(power_of(q, ell).exact, tag + "quotient is a power of ell");
      const Verdict v = verify_regular_singular(x, ell);
      c.expect(v.passed(), tag + "verdict");
      if (n == 5 && ell == 2) {
        c.expect(abs(det(t.x_reg)) == 15, "n=5 ell=2: |det X_reg| = 15");
        c.expect(q == 16, "n=5 ell=2: det C_reg = 16");
        const auto* check = v.find("cartan_det");
        bool saw = false;
        if (check)
          for (const auto& w : check->witnesses) saw |= w.key == "det_regular" && w.value == "16";
        c.expect(saw, "n=5 ell=2: reported det C_reg = 16");
      }
    }
  }
}

// --- 6 ---
void ktables(Criterion& c) {
  const auto dir = cache_dir() / "ktables";
  fs::create_directories(dir);
  for (int n = 1; n <= 8; ++n) {
    for (int k : {n, n + 1}) {
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
      const KTable t = make_trivial_fixture(n, k);
      c.expect(verify_transition_theorem(t).passed(), tag + "transition verdict");
      c.expect(verify_dual_observations(t).passed(), tag + "dual verdict");
      const auto file = dir / ("fixture-" + std::to_string(n) + "-" + std::to_string(k) + ".json");
      save_ktable(t, file);
      std::ifstream in(file, std::ios::binary);
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const KTable back = load_ktable(file);
      c.expect(to_json(back) == text && back.values == t.values, tag + "round trip");
      c.expect(cli_run({"kschur", "verify", file.string()}) == 0, tag + "cli verify");
    }
  }
  // a single perturbed entry
  KTable bad = make_trivial_fixture(6, 6);
  bad.values(3, 2) += 1;
  const auto bad_file = dir / "perturbed.json";
  save_ktable(bad, bad_file);
  c.expect(cli_run({"kschur", "verify", bad_file.string()}) == 1, "perturbed fixture exit 1");

  // k < n: property checks on ingested data
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": ";
      const CharTable x = load_or_build(n, cache_dir());
      KTable t;
      t.n = n;
      t.k = k;
      t.labels = k_bounded_partitions(n, k);
      std::vector<std::size_t> idx;
      for (const auto& l : t.labels) idx.push_back(x.index_of(l));
      t.values = x.values.select(idx, idx);
      t = parse_ktable(to_json(t));
      const KDualTable d = dual(t);
      std::vector<Integer> z;
      for (const auto& l : t.labels) z.push_back(stats(l).z);
      c.expect(to_rational(t.values).transpose() * d.values == to_rational(IntMatrix::diagonal(z)),
               tag + "duality product");
      const Verdict obs = verify_dual_observations(t);
      bool separated = obs.find("duality_product") && obs.find("duality_product")->evidence == Evidence::Proved &&
                       obs.find("dual_snf") && obs.find("dual_snf")->evidence == Evidence::Observed;
      c.expect(separated, tag + "proved and observed reported separately");
      c.expect(obs.find("duality_product")->status == Status::Pass, tag + "duality product check");
    }
  }
}

// --- 7 ---
void negative_controls(Criterion& c) {
  const auto dir = fs::temp_directory_path() / "symchar-negative-controls";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const char* previous = std::getenv("SYMCHAR_CACHE_DIR");
  const std::string saved = previous ? previous : "";
  setenv("SYMCHAR_CACHE_DIR", dir.c_str(), 1);

  CharTable x = build_table(6);
  x.values(7, 3) += 1;
  cache_table(x, dir);
  c.expect(cli_run({"verify", "6", "--alpha", "ALL"}) == 1, "verify ALL");
  c.expect(cli_run({"verify", "6", "--alpha", "1^2,4"}) == 1, "verify (1^2,4)");
  c.expect(cli_run({"verify", "6"}) == 1, "verify all cuts");
  c.expect(cli_run({"cartan", "6", "--alpha", "1^2,4"}) == 1, "cartan");
  c.expect(cli_run({"regsing", "6", "2"}) == 1, "regsing ell=2");
  c.expect(cli_run({"regsing", "6", "3"}) == 1, "regsing ell=3");

  // every table checker, directly
  for (const Cut& cut : all_cuts(6))
    if (cut.small_count(x.labels) > 7) c.expect(!verify_cut(x, cut).passed(), "verify_cut " + cut.str());
  c.expect(!transition_unitriangular_check(x, build_perm_table(6)), "transition check");
  KTable t;
  t.n = 6;
  t.k = 6;
  t.labels = x.labels;
  t.values = x.values;
  c.expect(!verify_transition_theorem(t).passed(), "k-table transition verdict");
  c.expect(!verify_dual_observations(t).passed(), "k-table dual verdict");

  if (previous)
    setenv("SYMCHAR_CACHE_DIR", saved.c_str(), 1);
  else
    unsetenv("SYMCHAR_CACHE_DIR");
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1 S5 ground truth", s5_ground_truth},
      {"2 cut sweep n <= 9", cut_sweep},
      {"3 Jacobi identity, 200 selections", jacobi},
      {"4 generating series", series},
      {"5 regular/singular sweep n <= 9", regular_singular},
      {"6 k-table harness", ktables},
      {"7 negative controls", negative_controls},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << static_cast<long>(ms) << " ms)\n";
    for (const auto& f : c.failures) std::cout << "      " << f << '\n';
  }
  return all ? 0 : 1;
}
