#pragma once

// Deterministic artifact production shared by the serialization tests and
// tools/regen_golden. Every byte here is pinned by DetRng seeds and fork
// labels; any change to an encoding, a derivation domain string, or the
// sampling order shows up as a mismatch against tests/golden/artifacts_*.txt.

#include <string>
#include <utility>
#include <vector>

#include "gridabe/attributes.hpp"
#include "gridabe/protocol.hpp"

namespace gridabe::testsupport {

inline const char* kGoldenPolicy =
    R"({"and":[{"attr":"area.north"},{"or":[{"attr":"tier.retail"},{"attr":"meter.smart"}]}]})";

// One full run at n = 3, k = 2: setup, key issue, a baseline ciphertext,
// registration, a batch of two, one delayed unit, pre-decryption.
template <typename B>
std::vector<std::pair<std::string, Bytes>> golden_artifacts() {
  using S = typename B::Scalar;
  constexpr std::size_t n = 3, k = 2;

  DetRng rng(20240711);
  AttributeUniverse uni({"area.north", "tier.retail", "meter.smart"});
  auto setup_rng = rng.fork("setup");
  auto [pk, mk] = setup<B>(uni, setup_rng);
  PolicyNode policy = parse_policy(kGoldenPolicy, uni);
  auto key_rng = rng.fork("key");
  DecryptionKey<B> key = keygen(mk, policy, key_rng);

  EncryptContext<B> ctx(pk);
  std::vector<std::uint32_t> gamma{1, 2};
  BytesView payload = as_bytes("golden artifact payload v1");
  auto enc_rng = rng.fork("baseline");
  BaselineCiphertext<B> base_ct = gpsw_encrypt(ctx, gamma, payload, enc_rng);

  AeadKey group_key = rng.fork("group-key").key32();
  std::vector<S> roster;
  std::vector<S> secrets;
  std::vector<Cid<B>> cids;
  auto g1 = B::G1::generator();
  for (std::size_t i = 0; i < n; ++i) {
    auto unit_rng = rng.fork("unit." + std::to_string(i + 1));
    S s = S::sample_nonzero(unit_rng);
    secrets.push_back(s);
    cids.push_back(register_cid<B>(roster, group_key, unit_rng, g1.exp(s)));
  }

  // units 1 and 2 contribute the round polynomial; everyone gets a share
  std::vector<Contribution<B>> contribs;
  for (std::size_t i = 0; i < k; ++i) {
    auto c_rng = rng.fork("contrib." + std::to_string(i + 1));
    contribs.push_back(gen_contribution<B>(c_rng, k, secrets[i]));
  }
  std::vector<S> h(n, S::zero());
  for (const auto& c : contribs) {
    auto vals = eval_shares<B>(c, roster);
    for (std::size_t j = 0; j < n; ++j) h[j] = h[j] + vals[j];
  }

  std::vector<SemiCiphertext<B>> batch;
  for (std::size_t i = 0; i < k; ++i) {
    auto s_rng = rng.fork("semi." + std::to_string(i + 1));
    batch.push_back(ru_encrypt(ctx, gamma, payload, secrets[i], h[i], cids[i], true, s_rng));
  }
  auto late_rng = rng.fork("semi.3");
  SemiCiphertext<B> late =
      ru_encrypt(ctx, gamma, payload, secrets[2], h[2], cids[2], false, late_rng);

  auto [finished, round_value] = ca_finalize_batch(batch, k);
  FinishedCiphertext<B> finished_late = ca_finalize_delayed(late, {round_value}, roster);
  PreDecryptedCiphertext<B> predec = cd_predecrypt(finished[0], group_key, pk);

  return {
      {"public_key", pk.to_bytes()},
      {"master_key", mk.to_bytes()},
      {"decryption_key", key.to_bytes()},
      {"baseline_ct", base_ct.to_bytes()},
      {"semi_batch", batch[0].to_bytes()},
      {"semi_delayed", late.to_bytes()},
      {"finished_batch", finished[0].to_bytes()},
      {"finished_delayed", finished_late.to_bytes()},
      {"predecrypted", predec.to_bytes()},
  };
}

}  // namespace gridabe::testsupport
