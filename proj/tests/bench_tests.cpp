#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "gridabe/bench.hpp"

using namespace gridabe;

namespace {

BenchConfig tiny_grid() {
  BenchConfig cfg;
  cfg.schemes = {SchemeKind::kScheme1, SchemeKind::kScheme2, SchemeKind::kProposed};
  cfg.sweep = SweepVar::kRus;
  cfg.values = {2, 3};
  cfg.msg_bytes = 256;
  cfg.attrs = 2;
  cfg.reps = 1;
  cfg.seed = 5;
  return cfg;
}

// a synthetic row with just enough filled in for the fit machinery
BenchRow row(const char* scheme, const char* sweep, std::uint64_t value, double dec,
             double per_party_enc, double enc) {
  BenchRow r;
  r.scheme = scheme;
  r.sweep = sweep;
  r.value = value;
  r.rep = 0;
  r.t_rus = 20;
  r.msg_bytes = 4096;
  r.attrs = 4;
  r.k = 10;
  r.dec_outer_us = r.total_dec_us = r.total_dec_model_us = dec;
  r.per_party_enc_us = per_party_enc;
  r.enc_outer_us = r.total_enc_us = r.total_enc_model_us = enc;
  return r;
}

}  // namespace

TEST_CASE("least squares recovers exact lines") {
  auto fit = fit_line({{1, 3}, {2, 5}, {3, 7}, {4, 9}});  // y = 2x + 1
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.r2 == doctest::Approx(1.0));

  auto flat = fit_line({{1, 5}, {2, 5}, {3, 5}});
  CHECK(flat.slope == doctest::Approx(0.0));
  CHECK(flat.r2 == doctest::Approx(1.0));  // the constant model is exact

  auto down = fit_line({{0, 10}, {1, 8}, {2, 6}});
  CHECK(down.slope == doctest::Approx(-2.0));

  auto noisy = fit_line({{0, 0}, {1, 2}, {2, 1}, {3, 3}});
  CHECK(noisy.r2 < 1.0);
  CHECK(noisy.r2 > 0.0);

  CHECK_THROWS_AS(fit_line({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_line({{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("scheme and sweep labels are stable") {
  CHECK(scheme_name(SchemeKind::kScheme1) == std::string("scheme1"));
  CHECK(scheme_name(SchemeKind::kScheme2) == std::string("scheme2"));
  CHECK(scheme_name(SchemeKind::kProposed) == std::string("proposed"));
  CHECK(sweep_name(SweepVar::kRus) == std::string("rus"));
  CHECK(sweep_name(SweepVar::kSize) == std::string("size"));
  CHECK(sweep_name(SweepVar::kAttrs) == std::string("attrs"));
}

TEST_CASE("csv round-trips every column") {
  auto cfg = tiny_grid();
  auto rows = run_grid(cfg);
  REQUIRE(rows.size() == cfg.schemes.size() * cfg.values.size());

  std::ostringstream os;
  write_csv(rows, os);
  std::istringstream is(os.str());
  auto back = parse_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].scheme == rows[i].scheme);
    CHECK(back[i].value == rows[i].value);
    CHECK(back[i].t_rus == rows[i].t_rus);
    CHECK(back[i].k == rows[i].k);
    // timings travel at millisecond precision in microsecond units
    CHECK(back[i].dec_outer_us == doctest::Approx(rows[i].dec_outer_us).epsilon(1e-3));
    CHECK(back[i].total_enc_model_us ==
          doctest::Approx(rows[i].total_enc_model_us).epsilon(1e-3));
    CHECK(back[i].enc_ops == rows[i].enc_ops);
    CHECK(back[i].dec_ops == rows[i].dec_ops);
  }

  std::istringstream empty("");
  CHECK_THROWS_AS(parse_csv(empty), std::invalid_argument);
  std::istringstream wrong("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(wrong), std::invalid_argument);
}

TEST_CASE("a tiny grid produces deterministic op counts") {
  auto cfg = tiny_grid();
  auto r1 = run_grid(cfg);
  auto r2 = run_grid(cfg);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].scheme == r2[i].scheme);
    CHECK(r1[i].enc_ops == r2[i].enc_ops);
    CHECK(r1[i].dec_ops == r2[i].dec_ops);
  }

  // k defaults to ceil(t/2)
  for (const auto& r : r1)
    if (r.scheme == "proposed") CHECK(r.k == (r.t_rus + 1) / 2);
}

TEST_CASE("parallel and sequential runs agree on everything but timing") {
  auto cfg = tiny_grid();
  auto seq = run_grid(cfg);
  cfg.parallel = true;
  auto par = run_grid(cfg);
  REQUIRE(par.size() == seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(par[i].scheme == seq[i].scheme);
    CHECK(par[i].value == seq[i].value);
    CHECK(par[i].enc_ops == seq[i].enc_ops);
    CHECK(par[i].dec_ops == seq[i].dec_ops);
  }
}

TEST_CASE("the proposed scheme's measured spans match its cost model") {
  auto cfg = tiny_grid();
  auto rows = run_grid(cfg);
  for (const auto& r : rows) {
    if (r.scheme != "proposed") continue;
    double enc_components = double(r.tpk_us) + r.st_us + r.et_us + r.dst_ca_us;
    CHECK(r.total_enc_model_us == doctest::Approx(enc_components).epsilon(1e-9));
    double dec_components = r.dst_cd_us + r.dt_us;
    CHECK(r.total_dec_model_us == doctest::Approx(dec_components).epsilon(1e-9));
    // outer span vs component sum: same work, two timers
    CHECK(std::abs(r.total_dec_us - r.total_dec_model_us) <=
          0.05 * r.total_dec_model_us);
    CHECK(std::abs(r.total_enc_us - r.total_enc_model_us) <=
          0.05 * r.total_enc_model_us);
  }
}

TEST_CASE("a threshold above the unit count is rejected") {
  auto cfg = tiny_grid();
  cfg.k = 5;  // values are 2 and 3 units
  CHECK_THROWS_AS(run_grid(cfg), std::invalid_argument);
}

TEST_CASE("gnuplot export groups medians by scheme") {
  auto cfg = tiny_grid();
  auto rows = run_grid(cfg);
  std::ostringstream os;
  write_gnuplot(rows, os);
  std::string out = os.str();
  CHECK(out.find("# scheme: scheme1") != std::string::npos);
  CHECK(out.find("# scheme: scheme2") != std::string::npos);
  CHECK(out.find("# scheme: proposed") != std::string::npos);
}

TEST_CASE("trend assertions pass on shaped data and fail on flat data") {
  // hand-built rus sweep: scheme2 decryption linear in t, others flat
  std::vector<BenchRow> rows;
  for (std::uint64_t t : {5, 10, 20, 40}) {
    rows.push_back(row("scheme2", "rus", t, 1000.0 * double(t), 50, 900));
    rows.push_back(row("scheme1", "rus", t, 4000.0, 60, 900));
    rows.push_back(row("proposed", "rus", t, 3000.0 + double(t), 40, 900));
  }
  auto report = fit_trends(rows);
  CHECK(report.pass);
  CHECK(report.text.find("result: PASS") != std::string::npos);

  // flatten scheme2: the linear-growth assertion must fail
  std::vector<BenchRow> flat;
  for (std::uint64_t t : {5, 10, 20, 40}) {
    flat.push_back(row("scheme2", "rus", t, 1234.0, 50, 900));
    flat.push_back(row("scheme1", "rus", t, 4000.0, 60, 900));
    flat.push_back(row("proposed", "rus", t, 3000.0, 40, 900));
  }
  auto bad = fit_trends(flat);
  CHECK_FALSE(bad.pass);
  CHECK(bad.text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("trend evaluation needs enough well-formed data") {
  std::vector<BenchRow> rows;
  CHECK_THROWS_AS(fit_trends(rows), std::invalid_argument);

  // only two sweep values: too few points for a meaningful fit
  for (std::uint64_t t : {5, 10}) {
    rows.push_back(row("scheme2", "rus", t, 100.0 * double(t), 50, 900));
    rows.push_back(row("scheme1", "rus", t, 400.0, 60, 900));
    rows.push_back(row("proposed", "rus", t, 300.0, 40, 900));
  }
  CHECK_THROWS_AS(fit_trends(rows), std::invalid_argument);

  // mixed sweeps in one file are ambiguous
  std::vector<BenchRow> mixed;
  for (std::uint64_t t : {5, 10, 20, 40}) {
    mixed.push_back(row("scheme2", "rus", t, 100.0 * double(t), 50, 900));
    mixed.push_back(row("scheme2", "size", t, 100.0 * double(t), 50, 900));
  }
  CHECK_THROWS_AS(fit_trends(mixed), std::invalid_argument);

  // a scheme with no rows at all is a hard failure, not a silent pass
  std::vector<BenchRow> missing;
  for (std::uint64_t t : {5, 10, 20, 40})
    missing.push_back(row("scheme2", "rus", t, 100.0 * double(t), 50, 900));
  auto report = fit_trends(missing);
  CHECK_FALSE(report.pass);
  CHECK(report.text.find("rows absent") != std::string::npos);
}

TEST_CASE("attrs sweep asserts the per-party encryption ordering") {
  std::vector<BenchRow> rows;
  for (std::uint64_t a : {2, 4, 8, 16}) {
    rows.push_back(row("scheme1", "attrs", a, 900, 5000.0 + 10 * double(a), 5000));
    rows.push_back(row("scheme2", "attrs", a, 900, 2500.0 + 10 * double(a), 2500));
    rows.push_back(row("proposed", "attrs", a, 900, 2400.0 + 10 * double(a), 2400));
  }
  CHECK(fit_trends(rows).pass);

  // proposed costlier than scheme1 at the top of the sweep: must fail
  for (auto& r : rows)
    if (r.scheme == "proposed" && r.value == 16) r.per_party_enc_us = 9999.0;
  CHECK_FALSE(fit_trends(rows).pass);
}
