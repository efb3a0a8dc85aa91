#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridabe/ops.hpp"

namespace gridabe {

// The three compared designs:
//   scheme1   a trusted aggregator collects all plaintexts during the
//             transaction period and encrypts them as one blob afterwards
//   scheme2   every unit encrypts independently; the operator decrypts
//             each ciphertext separately
//   proposed  the threshold round from protocol.hpp: k early units enable
//             finalization, late units cost the aggregator one multiply
enum class SchemeKind { kScheme1 = 1, kScheme2 = 2, kProposed = 3 };

enum class SweepVar { kRus, kSize, kAttrs };

const char* scheme_name(SchemeKind s);
const char* sweep_name(SweepVar v);
std::optional<SchemeKind> scheme_from_name(const std::string& s);
std::optional<SweepVar> sweep_from_name(const std::string& s);

inline constexpr std::uint64_t kDefaultTpUs = 1'000'000;
inline constexpr std::uint64_t kDefaultTpkUs = 500'000;

// One measured repetition of one (scheme, sweep value) cell. Component
// spans are wall-clock microseconds of the labelled pipeline stages:
//   st      secret sharing work of all units (contribution, shares, h)
//   et      encryption proper (KEM, blinding, attribute components, AEAD)
//   dst_ca  aggregator finalization (batch reconstruction + delayed folds)
//   dst_cd  pre-decryption service (cid opening + pairings)
//   dt      operator decryption (share combination, tree walk, unwrapping)
// *_outer spans wrap the same stages with a single timer, giving the
// measured side of the model-vs-measurement consistency check. Totals fold
// in the transaction-period constants the way the cost model prescribes.
struct BenchRow {
  std::string scheme;
  std::string sweep;
  std::uint64_t value = 0;
  int rep = 0;
  std::size_t t_rus = 0;
  std::size_t msg_bytes = 0;
  std::size_t attrs = 0;
  std::size_t k = 0;
  std::uint64_t tp_us = 0;
  std::uint64_t tpk_us = 0;

  double st_us = 0, et_us = 0, dst_ca_us = 0, dst_cd_us = 0, dt_us = 0;
  double enc_outer_us = 0, dec_outer_us = 0, per_party_enc_us = 0;
  double total_enc_us = 0, total_enc_model_us = 0;
  double total_dec_us = 0, total_dec_model_us = 0;

  OpCounts enc_ops, dec_ops;
};

struct BenchConfig {
  std::vector<SchemeKind> schemes;
  SweepVar sweep = SweepVar::kRus;
  std::vector<std::uint64_t> values;
  std::size_t n = 20;           // participating units when not swept
  std::size_t k = 0;            // 0 = ceil(t/2)
  std::size_t msg_bytes = 102400;
  std::size_t attrs = 16;
  int reps = 3;
  std::uint64_t seed = 1;
  bool parallel = false;
  std::uint64_t tp_us = kDefaultTpUs;
  std::uint64_t tpk_us = kDefaultTpkUs;
};

// One warm-up repetition per cell is run and discarded. Timings vary run
// to run; the op-count columns do not, for a fixed seed and grid.
std::vector<BenchRow> run_grid(const BenchConfig& cfg);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
std::vector<BenchRow> parse_csv(std::istream& in);

// medians per sweep value in gnuplot column format, one block per scheme
void write_gnuplot(const std::vector<BenchRow>& rows, std::ostream& out);

struct FitLine {
  double slope = 0, intercept = 0, r2 = 0;
};

// least-squares fit; at least two distinct x values required
FitLine fit_line(const std::vector<std::pair<double, double>>& pts);

struct TrendReport {
  std::string text;
  bool pass = false;
};

// Evaluates the shape assertions for whichever sweep the rows contain:
//   rus    scheme2 operator decryption grows linearly (positive slope,
//          R^2 >= 0.9) and both other schemes grow strictly slower
//   size   scheme1 encryption grows with data volume (positive slope)
//   attrs  at the largest attribute count the per-party encryption of
//          proposed and scheme2 both undercut scheme1
TrendReport fit_trends(const std::vector<BenchRow>& rows);

}  // namespace gridabe
