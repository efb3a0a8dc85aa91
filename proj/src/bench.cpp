#include "gridabe/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridabe/bls12_381.hpp"
#include "gridabe/protocol.hpp"

namespace gridabe {

const char* scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::kScheme1: return "scheme1";
    case SchemeKind::kScheme2: return "scheme2";
    case SchemeKind::kProposed: return "proposed";
  }
  return "?";
}

const char* sweep_name(SweepVar v) {
  switch (v) {
    case SweepVar::kRus: return "rus";
    case SweepVar::kSize: return "size";
    case SweepVar::kAttrs: return "attrs";
  }
  return "?";
}

std::optional<SchemeKind> scheme_from_name(const std::string& s) {
  if (s == "1" || s == "scheme1") return SchemeKind::kScheme1;
  if (s == "2" || s == "scheme2") return SchemeKind::kScheme2;
  if (s == "proposed") return SchemeKind::kProposed;
  return std::nullopt;
}

std::optional<SweepVar> sweep_from_name(const std::string& s) {
  if (s == "rus") return SweepVar::kRus;
  if (s == "size") return SweepVar::kSize;
  if (s == "attrs") return SweepVar::kAttrs;
  return std::nullopt;
}

namespace {

using B = Bls12_381;
using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

template <typename F>
double span_us(F&& f) {
  auto t0 = Clock::now();
  f();
  return elapsed_us(t0);
}

// derived cell parameters for one sweep value
struct CellParams {
  std::size_t t, m, a, k;
};

CellParams cell_params(const BenchConfig& cfg, std::uint64_t value) {
  CellParams p{cfg.n, cfg.msg_bytes, cfg.attrs, cfg.k};
  switch (cfg.sweep) {
    case SweepVar::kRus: p.t = value; break;
    case SweepVar::kSize: p.m = value; break;
    case SweepVar::kAttrs: p.a = value; break;
  }
  if (p.t == 0) throw std::invalid_argument("unit count must be positive");
  if (p.m == 0 || p.m > kMaxPayloadBytes)
    throw std::invalid_argument("message size out of range");
  if (p.a == 0 || p.a > kMaxAttributes)
    throw std::invalid_argument("attribute count out of range");
  if (p.k == 0) p.k = (p.t + 1) / 2;
  if (p.k > p.t) throw std::invalid_argument("threshold exceeds the unit count");
  return p;
}

// Shared fixture for every repetition at one sweep value: keys, policy,
// payloads. Building it is deliberately outside all measured spans.
struct Cell {
  CellParams p;
  AttributeUniverse uni;
  std::optional<Authority<B>> authority;
  std::optional<EncryptContext<B>> ctx;
  DecryptionKey<B> key;
  std::vector<std::uint32_t> gamma;
  std::vector<Bytes> payloads;
  Bytes concat;

  Cell(const BenchConfig& cfg, std::uint64_t value) : p(cell_params(cfg, value)) {
    std::vector<std::string> labels;
    labels.reserve(p.a);
    for (std::size_t i = 1; i <= p.a; ++i) labels.push_back("a" + std::to_string(i));
    uni = AttributeUniverse(labels);

    DetRng root(cfg.seed);
    DetRng setup_rng = root.fork("setup.a" + std::to_string(p.a));
    authority.emplace(Authority<B>::create(uni, setup_rng));
    ctx.emplace(authority->pk());

    std::vector<PolicyNode> leaves;
    for (std::size_t i = 1; i <= p.a; ++i) leaves.push_back(PolicyNode::leaf(std::uint32_t(i)));
    auto nleaves = std::uint32_t(leaves.size());
    PolicyNode policy = PolicyNode::gate(nleaves, std::move(leaves));
    DetRng key_rng = root.fork("key.a" + std::to_string(p.a));
    key = authority->issue(policy, key_rng);

    for (std::size_t i = 1; i <= p.a; ++i) gamma.push_back(std::uint32_t(i));

    DetRng pay_rng = root.fork("payload.t" + std::to_string(p.t) + ".m" + std::to_string(p.m));
    payloads.resize(p.t);
    concat.reserve(p.t * p.m);
    for (auto& pl : payloads) {
      pl.resize(p.m);
      pay_rng.fill(pl.data(), pl.size());
      concat.insert(concat.end(), pl.begin(), pl.end());
    }
  }
};

void require_match(const std::optional<Bytes>& got, const Bytes& want) {
  // a benchmark over broken crypto would measure garbage; fail loudly
  if (!got || *got != want) throw std::logic_error("benchmark decryption mismatch");
}

BenchRow base_row(const BenchConfig& cfg, const Cell& cell, SchemeKind scheme,
                  std::uint64_t value, int rep) {
  BenchRow r;
  r.scheme = scheme_name(scheme);
  r.sweep = sweep_name(cfg.sweep);
  r.value = value;
  r.rep = rep;
  r.t_rus = cell.p.t;
  r.msg_bytes = cell.p.m;
  r.attrs = cell.p.a;
  r.k = cell.p.k;
  r.tp_us = cfg.tp_us;
  r.tpk_us = cfg.tpk_us;
  return r;
}

BenchRow run_scheme1(const BenchConfig& cfg, const Cell& cell, std::uint64_t value, int rep,
                     DetRng rng) {
  BenchRow r = base_row(cfg, cell, SchemeKind::kScheme1, value, rep);
  const auto& ctx = *cell.ctx;

  BaselineCiphertext<B> ct;
  OpCounts before = op_counts();
  r.et_us = span_us([&] { ct = gpsw_encrypt(ctx, cell.gamma, cell.concat, rng); });
  r.enc_ops = op_counts() - before;
  r.enc_outer_us = r.et_us;
  r.per_party_enc_us = r.et_us;  // the aggregator is the only encrypting party
  r.total_enc_us = double(cfg.tp_us) + r.enc_outer_us;
  r.total_enc_model_us = double(cfg.tp_us) + r.et_us;

  std::optional<Bytes> out;
  before = op_counts();
  r.dt_us = span_us([&] { out = gpsw_decrypt(cell.key, ct); });
  r.dec_ops = op_counts() - before;
  require_match(out, cell.concat);
  r.dec_outer_us = r.dt_us;
  r.total_dec_us = r.dec_outer_us;
  r.total_dec_model_us = r.dt_us;
  return r;
}

BenchRow run_scheme2(const BenchConfig& cfg, const Cell& cell, std::uint64_t value, int rep,
                     DetRng rng) {
  BenchRow r = base_row(cfg, cell, SchemeKind::kScheme2, value, rep);
  const auto& ctx = *cell.ctx;
  const std::size_t t = cell.p.t;

  std::vector<BaselineCiphertext<B>> cts(t);
  OpCounts before = op_counts();
  auto enc_t0 = Clock::now();
  for (std::size_t i = 0; i < t; ++i) {
    DetRng unit_rng = rng.fork("u" + std::to_string(i));
    r.et_us += span_us([&] { cts[i] = gpsw_encrypt(ctx, cell.gamma, cell.payloads[i], unit_rng); });
  }
  r.enc_outer_us = elapsed_us(enc_t0);
  r.enc_ops = op_counts() - before;
  r.per_party_enc_us = r.et_us / double(t);
  // the units encrypt in parallel inside the open window, so the window is
  // the total: T = TP
  r.total_enc_us = double(cfg.tp_us);
  r.total_enc_model_us = double(cfg.tp_us);

  std::vector<std::optional<Bytes>> outs(t);
  before = op_counts();
  auto dec_t0 = Clock::now();
  for (std::size_t i = 0; i < t; ++i)
    r.dt_us += span_us([&] { outs[i] = gpsw_decrypt(cell.key, cts[i]); });
  r.dec_outer_us = elapsed_us(dec_t0);
  r.dec_ops = op_counts() - before;
  for (std::size_t i = 0; i < t; ++i) require_match(outs[i], cell.payloads[i]);
  r.total_dec_us = r.dec_outer_us;
  r.total_dec_model_us = r.dt_us;  // t repetitions of the single-unit cost
  return r;
}

BenchRow run_proposed(const BenchConfig& cfg, const Cell& cell, std::uint64_t value, int rep,
                      DetRng rng) {
  BenchRow r = base_row(cfg, cell, SchemeKind::kProposed, value, rep);
  const auto& ctx = *cell.ctx;
  const std::size_t t = cell.p.t;
  const std::size_t k = cell.p.k;

  // registration happened before the round: secrets, commitments, roster
  AeadKey group_key = rng.fork("group-key").key32();
  std::vector<B::Scalar> secrets(t);
  std::vector<B::Scalar> roster;
  std::vector<Cid<B>> cids(t);
  for (std::size_t i = 0; i < t; ++i) {
    DetRng reg_rng = rng.fork("reg.u" + std::to_string(i));
    secrets[i] = B::Scalar::sample_nonzero(reg_rng);
    cids[i] = register_cid<B>(roster, group_key, reg_rng, B::G1::generator().exp(secrets[i]));
  }

  std::vector<B::Scalar> h(t);
  std::vector<SemiCiphertext<B>> semis(t);
  std::vector<FinishedCiphertext<B>> finished;
  B::Gt round_value;

  OpCounts before = op_counts();
  auto enc_t0 = Clock::now();

  r.st_us = span_us([&] {
    // the first k units to report are the contributors
    std::vector<Contribution<B>> contribs;
    contribs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      DetRng share_rng = rng.fork("share.u" + std::to_string(i));
      contribs.push_back(gen_contribution<B>(share_rng, k, secrets[i]));
    }
    std::vector<std::vector<B::Scalar>> dealt(k);
    for (std::size_t i = 0; i < k; ++i) dealt[i] = eval_shares<B>(contribs[i], roster);
    for (std::size_t j = 0; j < t; ++j) {
      std::vector<B::Scalar> incoming;
      incoming.reserve(k);
      for (std::size_t i = 0; i < k; ++i) incoming.push_back(dealt[i][j]);
      h[j] = aggregate_h<B>(incoming, k);
    }
  });

  r.et_us = span_us([&] {
    for (std::size_t i = 0; i < t; ++i) {
      DetRng enc_rng = rng.fork("enc.u" + std::to_string(i));
      semis[i] = ru_encrypt(ctx, cell.gamma, cell.payloads[i], secrets[i], h[i], cids[i],
                            i < k, enc_rng);
    }
  });

  r.dst_ca_us = span_us([&] {
    std::vector<SemiCiphertext<B>> batch(semis.begin(), semis.begin() + k);
    auto [fin, val] = ca_finalize_batch(batch, k);
    round_value = val;
    finished = std::move(fin);
    std::optional<B::Gt> cached = round_value;
    for (std::size_t i = k; i < t; ++i)
      finished.push_back(ca_finalize_delayed(semis[i], cached, roster));
  });

  r.enc_outer_us = elapsed_us(enc_t0);
  r.enc_ops = op_counts() - before;
  r.per_party_enc_us = (r.st_us + r.et_us) / double(t);
  r.total_enc_us = double(cfg.tpk_us) + r.enc_outer_us;
  r.total_enc_model_us = double(cfg.tpk_us) + r.st_us + r.et_us + r.dst_ca_us;

  std::vector<PreDecryptedCiphertext<B>> predec(t);
  std::vector<std::optional<Bytes>> outs;

  before = op_counts();
  auto dec_t0 = Clock::now();
  r.dst_cd_us = span_us([&] {
    for (std::size_t i = 0; i < t; ++i)
      predec[i] = cd_predecrypt(finished[i], group_key, ctx.pk());
  });
  r.dt_us = span_us([&] { outs = ao_decrypt(predec, cell.key, k); });
  r.dec_outer_us = elapsed_us(dec_t0);
  r.dec_ops = op_counts() - before;
  for (std::size_t i = 0; i < t; ++i) require_match(outs[i], cell.payloads[i]);
  r.total_dec_us = r.dec_outer_us;
  r.total_dec_model_us = r.dst_cd_us + r.dt_us;
  return r;
}

BenchRow run_one(const BenchConfig& cfg, const Cell& cell, SchemeKind scheme,
                 std::uint64_t value, int rep, DetRng rng) {
  switch (scheme) {
    case SchemeKind::kScheme1: return run_scheme1(cfg, cell, value, rep, std::move(rng));
    case SchemeKind::kScheme2: return run_scheme2(cfg, cell, value, rep, std::move(rng));
    case SchemeKind::kProposed: return run_proposed(cfg, cell, value, rep, std::move(rng));
  }
  throw std::logic_error("unknown scheme");
}

std::vector<BenchRow> run_value(const BenchConfig& cfg, std::uint64_t value) {
  Cell cell(cfg, value);
  std::vector<BenchRow> rows;
  DetRng root(cfg.seed);
  for (SchemeKind scheme : cfg.schemes) {
    std::string tag = std::string(scheme_name(scheme)) + ".v" + std::to_string(value);
    // warm-up: builds the lazy window tables and touches every code path
    run_one(cfg, cell, scheme, value, -1, root.fork(tag + ".warmup"));
    for (int rep = 0; rep < cfg.reps; ++rep)
      rows.push_back(run_one(cfg, cell, scheme, value, rep,
                             root.fork(tag + ".rep" + std::to_string(rep))));
  }
  return rows;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<BenchRow> run_grid(const BenchConfig& cfg) {
  if (cfg.schemes.empty()) throw std::invalid_argument("no schemes selected");
  if (cfg.values.empty()) throw std::invalid_argument("no sweep values given");
  if (cfg.reps < 1) throw std::invalid_argument("need at least one repetition");

  std::vector<BenchRow> rows;
  if (cfg.parallel) {
    std::vector<std::future<std::vector<BenchRow>>> futs;
    futs.reserve(cfg.values.size());
    for (auto v : cfg.values)
      futs.push_back(std::async(std::launch::async, [&cfg, v] { return run_value(cfg, v); }));
    for (auto& f : futs) {
      auto part = f.get();
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else {
    for (auto v : cfg.values) {
      auto part = run_value(cfg, v);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  return rows;
}

namespace {

const char* kCsvHeader =
    "scheme,sweep,value,rep,t_rus,msg_bytes,attrs,k,tp_us,tpk_us,"
    "st_us,et_us,dst_ca_us,dst_cd_us,dt_us,"
    "enc_outer_us,dec_outer_us,per_party_enc_us,"
    "total_enc_us,total_enc_model_us,total_dec_us,total_dec_model_us,"
    "enc_pairings,enc_g1_exps,enc_g2_exps,enc_gt_exps,enc_interpolations,enc_decrypt_node_runs,"
    "dec_pairings,dec_g1_exps,dec_g2_exps,dec_gt_exps,dec_interpolations,dec_decrypt_node_runs";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kCsvHeader << "\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    out << r.scheme << ',' << r.sweep << ',' << r.value << ',' << r.rep << ',' << r.t_rus << ','
        << r.msg_bytes << ',' << r.attrs << ',' << r.k << ',' << r.tp_us << ',' << r.tpk_us << ','
        << r.st_us << ',' << r.et_us << ',' << r.dst_ca_us << ',' << r.dst_cd_us << ',' << r.dt_us
        << ',' << r.enc_outer_us << ',' << r.dec_outer_us << ',' << r.per_party_enc_us << ','
        << r.total_enc_us << ',' << r.total_enc_model_us << ',' << r.total_dec_us << ','
        << r.total_dec_model_us << ',' << r.enc_ops.pairings << ',' << r.enc_ops.g1_exps << ','
        << r.enc_ops.g2_exps << ',' << r.enc_ops.gt_exps << ',' << r.enc_ops.interpolations << ','
        << r.enc_ops.decrypt_node_runs << ',' << r.dec_ops.pairings << ',' << r.dec_ops.g1_exps
        << ',' << r.dec_ops.g2_exps << ',' << r.dec_ops.gt_exps << ',' << r.dec_ops.interpolations
        << ',' << r.dec_ops.decrypt_node_runs << "\n";
  }
}

std::vector<BenchRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::invalid_argument("unrecognized benchmark CSV header");
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 34) throw std::invalid_argument("malformed benchmark CSV row");
    BenchRow r;
    std::size_t i = 0;
    auto num = [&] { return std::stod(f[i++]); };
    r.scheme = f[i++];
    r.sweep = f[i++];
    r.value = std::stoull(f[i++]);
    r.rep = std::stoi(f[i++]);
    r.t_rus = std::stoull(f[i++]);
    r.msg_bytes = std::stoull(f[i++]);
    r.attrs = std::stoull(f[i++]);
    r.k = std::stoull(f[i++]);
    r.tp_us = std::stoull(f[i++]);
    r.tpk_us = std::stoull(f[i++]);
    r.st_us = num();
    r.et_us = num();
    r.dst_ca_us = num();
    r.dst_cd_us = num();
    r.dt_us = num();
    r.enc_outer_us = num();
    r.dec_outer_us = num();
    r.per_party_enc_us = num();
    r.total_enc_us = num();
    r.total_enc_model_us = num();
    r.total_dec_us = num();
    r.total_dec_model_us = num();
    auto cnt = [&] { return std::stoull(f[i++]); };
    r.enc_ops = {cnt(), cnt(), cnt(), cnt(), cnt(), cnt()};
    r.dec_ops = {cnt(), cnt(), cnt(), cnt(), cnt(), cnt()};
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

// scheme -> value -> list of a metric across reps
using MetricMap = std::map<std::string, std::map<std::uint64_t, std::vector<double>>>;

MetricMap collect(const std::vector<BenchRow>& rows, double BenchRow::* metric) {
  MetricMap m;
  for (const auto& r : rows) m[r.scheme][r.value].push_back(r.*metric);
  return m;
}

std::vector<std::pair<double, double>> median_points(
    const std::map<std::uint64_t, std::vector<double>>& per_value) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [v, ys] : per_value) pts.emplace_back(double(v), median(ys));
  return pts;
}

}  // namespace

void write_gnuplot(const std::vector<BenchRow>& rows, std::ostream& out) {
  MetricMap enc = collect(rows, &BenchRow::total_enc_us);
  MetricMap dec = collect(rows, &BenchRow::total_dec_us);
  MetricMap party = collect(rows, &BenchRow::per_party_enc_us);
  out << std::fixed << std::setprecision(3);
  for (const auto& [scheme, per_value] : enc) {
    out << "# scheme: " << scheme << "\n";
    out << "# value total_enc_us total_dec_us per_party_enc_us (medians)\n";
    for (const auto& [v, ys] : per_value) {
      out << v << ' ' << median(ys) << ' ' << median(dec[scheme][v]) << ' '
          << median(party[scheme][v]) << "\n";
    }
    out << "\n\n";
  }
}

FitLine fit_line(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("need at least two points to fit");
  double n = double(pts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double den = n * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("degenerate x values in fit");
  FitLine f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  double ss_res = 0, ss_tot = 0, mean = sy / n;
  for (auto [x, y] : pts) {
    double e = y - (f.slope * x + f.intercept);
    ss_res += e * e;
    ss_tot += (y - mean) * (y - mean);
  }
  f.r2 = ss_tot == 0 ? (ss_res == 0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
  return f;
}

TrendReport fit_trends(const std::vector<BenchRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows to fit");
  const std::string sweep = rows.front().sweep;
  for (const auto& r : rows)
    if (r.sweep != sweep) throw std::invalid_argument("mixed sweeps in one fit");

  std::map<std::string, std::set<std::uint64_t>> values_seen;
  for (const auto& r : rows) values_seen[r.scheme].insert(r.value);
  for (const auto& [scheme, vals] : values_seen)
    if (vals.size() < 4)
      throw std::invalid_argument("need at least four sweep points per scheme, " + scheme +
                                  " has " + std::to_string(vals.size()));

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "sweep: " << sweep << "\n";
  bool pass = true;

  auto has = [&](const char* s) { return values_seen.count(s) != 0; };
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    out << "assert " << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")\n";
    if (!ok) pass = false;
  };

  MetricMap dec = collect(rows, &BenchRow::total_dec_us);
  MetricMap enc_outer = collect(rows, &BenchRow::enc_outer_us);
  MetricMap party = collect(rows, &BenchRow::per_party_enc_us);

  std::map<std::string, FitLine> dec_fit;
  for (const auto& [scheme, per_value] : dec) {
    dec_fit[scheme] = fit_line(median_points(per_value));
    const FitLine& f = dec_fit[scheme];
    out << "fit " << scheme << " total_dec_us: slope=" << f.slope
        << " intercept=" << f.intercept << " r2=" << f.r2 << "\n";
  }
  for (const auto& [scheme, per_value] : enc_outer) {
    FitLine f = fit_line(median_points(per_value));
    out << "fit " << scheme << " enc_outer_us: slope=" << f.slope
        << " intercept=" << f.intercept << " r2=" << f.r2 << "\n";
  }

  if (sweep == "rus") {
    if (!has("scheme2")) {
      check("scheme2-decrypt-grows", false, "scheme2 rows absent");
    } else {
      const FitLine& f2 = dec_fit["scheme2"];
      std::ostringstream d;
      d << std::fixed << std::setprecision(3) << "slope=" << f2.slope << " r2=" << f2.r2;
      check("scheme2-decrypt-grows", f2.slope > 0 && f2.r2 >= 0.9, d.str());
      for (const char* other : {"scheme1", "proposed"}) {
        std::string name = std::string(other) + "-decrypt-grows-slower-than-scheme2";
        if (!has(other)) {
          check(name, false, std::string(other) + " rows absent");
          continue;
        }
        std::ostringstream dd;
        dd << std::fixed << std::setprecision(3) << "slope=" << dec_fit[other].slope
           << " vs " << f2.slope;
        check(name, dec_fit[other].slope < f2.slope, dd.str());
      }
    }
  } else if (sweep == "size") {
    if (!has("scheme1")) {
      check("scheme1-encrypt-grows-with-volume", false, "scheme1 rows absent");
    } else {
      FitLine f1 = fit_line(median_points(enc_outer["scheme1"]));
      std::ostringstream d;
      d << std::fixed << std::setprecision(3) << "slope=" << f1.slope << " r2=" << f1.r2;
      check("scheme1-encrypt-grows-with-volume", f1.slope > 0, d.str());
    }
  } else if (sweep == "attrs") {
    std::uint64_t vmax = 0;
    for (const auto& r : rows) vmax = std::max(vmax, r.value);
    auto med_at = [&](const char* scheme) -> std::optional<double> {
      auto it = party.find(scheme);
      if (it == party.end() || !it->second.count(vmax)) return std::nullopt;
      return median(it->second.at(vmax));
    };
    auto m1 = med_at("scheme1");
    auto m2 = med_at("scheme2");
    auto mp = med_at("proposed");
    if (!m1 || !m2 || !mp) {
      check("encrypt-ordering-at-max-attrs", false, "a scheme is absent at the largest value");
    } else {
      std::ostringstream d;
      d << std::fixed << std::setprecision(3) << "proposed=" << *mp << " scheme2=" << *m2
        << " scheme1=" << *m1 << " at " << vmax << " attrs";
      check("encrypt-ordering-at-max-attrs", *mp < *m1 && *m2 < *m1, d.str());
    }
  }

  // informational: worst model-vs-measurement gap across all rows
  double worst = 0;
  for (const auto& r : rows) {
    auto gap = [](double a, double b) {
      double ref = std::max(std::abs(a), 1.0);
      return std::abs(a - b) / ref;
    };
    worst = std::max({worst, gap(r.total_enc_us, r.total_enc_model_us),
                      gap(r.total_dec_us, r.total_dec_model_us)});
  }
  out << "model-vs-measured worst relative gap: " << worst << "\n";
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";

  TrendReport rep;
  rep.text = out.str();
  rep.pass = pass;
  return rep;
}

}  // namespace gridabe
