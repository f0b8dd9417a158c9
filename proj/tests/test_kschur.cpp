#include <filesystem>
#include <fstream>

#include "s5.hpp"
#include "support.hpp"
#include "symchar/kschur.hpp"

using namespace symchar;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "symchar-ktable-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

KTableErrorKind kind_of(const std::string& text) {
  try {
    parse_ktable(text);
  } catch (const KTableError& e) {
    return e.kind();
  }
  FAIL("expected a KTableError");
  return KTableErrorKind::Io;
}

}  // namespace

TEST_CASE("trivial fixtures") {
  CHECK(make_trivial_fixture(5, 5).values == kS5Table);
  CHECK(make_trivial_fixture(1, 1).values == IntMatrix{{1}});
  CHECK(make_trivial_fixture(4, 7).values == build_table(4).values);
  CHECK_THROWS_AS(make_trivial_fixture(5, 3), std::invalid_argument);
  CHECK(k_bounded_partitions(5, 2).size() == 3u);
}

TEST_CASE("trivial fixtures pass both verdicts for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int k : {n, n + 2}) {
      const KTable t = make_trivial_fixture(n, k);
      CHECK(verify_transition_theorem(t).passed());
      CHECK(verify_dual_observations(t).passed());
      const KDualTable d = dual(t);
      CHECK(d.integral);
      CHECK(to_integral(d.values) == std::optional<IntMatrix>(t.values));
    }
  }
  const Verdict obs = verify_dual_observations(make_trivial_fixture(5, 5));
  bool saw = false;
  for (const auto& w : obs.find("dual_det")->witnesses) saw |= w.value == "2880";
  CHECK(saw);
}

TEST_CASE("file round trip is bit-exact") {
  const KTable t = make_trivial_fixture(6, 6);
  const auto path = scratch("k6.json");
  save_ktable(t, path);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == to_json(t));
  const KTable back = load_ktable(path);
  CHECK(back.values == t.values);
  CHECK(back.labels == t.labels);
  CHECK(to_json(back) == text);
}

TEST_CASE("load errors have distinct kinds") {
  const std::string good = to_json(make_trivial_fixture(2, 2));
  CHECK(parse_ktable(good).values == build_table(2).values);
  CHECK(kind_of("{") == KTableErrorKind::Parse);
  CHECK(kind_of(R"({"format_version":1,"n":2,"k":2,"labels":["1^2","2"],"rows":[["1","-1"],["1"]]})") ==
        KTableErrorKind::NotSquare);
  CHECK(kind_of(R"({"format_version":1,"n":3,"k":3,"labels":["1^2","2"],"rows":[["1","-1"],["1","1"]]})") ==
        KTableErrorKind::SizeMismatch);
  CHECK(kind_of(R"({"format_version":1,"n":2,"k":2,"labels":["2","1^2"],"rows":[["1","-1"],["1","1"]]})") ==
        KTableErrorKind::LabelMismatch);
  CHECK(kind_of(R"({"format_version":1,"n":2,"k":2,"labels":["1^2","2"],"rows":[["1","x"],["1","1"]]})") ==
        KTableErrorKind::Parse);
  try {
    load_ktable(scratch("missing.json"));
    FAIL("expected an I/O error");
  } catch (const KTableError& e) {
    CHECK(e.kind() == KTableErrorKind::Io);
  }
}

TEST_CASE("single-entry perturbation is detected") {
  KTable t = make_trivial_fixture(5, 5);
  t.values(1, 2) += 1;
  CHECK_FALSE(verify_transition_theorem(t).passed());
}

TEST_CASE("k < n tables: duality product holds and evidence classes are separate") {
  // A synthetic k-table for n = 4, k = 2: the restricted character table itself is a valid
  // input (T0 = identity), which exercises the k < n label path without k-Schur data.
  const CharTable x = build_table(4);
  KTable t;
  t.n = 4;
  t.k = 2;
  t.labels = k_bounded_partitions(4, 2);
  std::vector<std::size_t> idx;
  for (const auto& l : t.labels) idx.push_back(x.index_of(l));
  t.values = x.values.select(idx, idx);
  const KTable reparsed = parse_ktable(to_json(t));
  CHECK(reparsed.values == t.values);

  const Verdict thm = verify_transition_theorem(t);
  CHECK(thm.passed());
  const Verdict obs = verify_dual_observations(t);
  CHECK(obs.find("duality_product")->status == Status::Pass);
  CHECK(obs.find("duality_product")->evidence == Evidence::Proved);
  CHECK(obs.find("dual_snf")->evidence == Evidence::Observed);
  CHECK(obs.passed(Evidence::Proved));
}
