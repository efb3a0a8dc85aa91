#include "gridabe/scenario.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridabe/protocol.hpp"

namespace gridabe {

namespace {

using json = nlohmann::ordered_json;
using B = DefaultBackend;

std::string scalar_hex(const B::Scalar& s) { return hex_encode(s.to_bytes()); }

struct Emitter {
  std::ostream& out;

  void line(std::uint64_t t_us, const std::string& role, const std::string& event, json fields) {
    json j;
    j["t_us"] = t_us;
    j["role"] = role;
    j["event"] = event;
    for (auto& [k, v] : fields.items()) j[k] = std::move(v);
    out << j.dump() << "\n";
  }
};

json ops_json(const OpCounts& d) {
  return json{{"pairings", d.pairings},
              {"g1_exps", d.g1_exps},
              {"g2_exps", d.g2_exps},
              {"gt_exps", d.gt_exps},
              {"interpolations", d.interpolations},
              {"decrypt_node_runs", d.decrypt_node_runs}};
}

struct OpDelta {
  OpCounts before;
  OpDelta() : before(op_counts()) {}
  OpCounts take() const { return op_counts() - before; }
};

struct RuRound {
  B::Scalar s;      // committed at registration
  Cid<B> cid;
  B::Scalar h;      // aggregated share, set once the batch forms
  bool has_h = false;
};

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("scenario must be a JSON object");

  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw std::invalid_argument(std::string("scenario lacks ") + key);
    return j.at(key);
  };

  ScenarioConfig cfg;
  cfg.n = need("n").get<std::uint32_t>();
  cfg.k = need("k").get<std::uint32_t>();
  cfg.tp_us = need("tp_us").get<std::uint64_t>();
  cfg.seed = need("seed").get<std::uint64_t>();
  cfg.msg_bytes = need("msg_bytes").get<std::size_t>();
  cfg.universe = need("universe").get<std::vector<std::string>>();
  cfg.area = need("area").get<std::vector<std::string>>();
  cfg.policy_json = need("policy").dump();
  for (const auto& a : need("arrivals")) {
    ScenarioArrival ar;
    ar.ru = a.at("ru").get<std::uint32_t>();
    ar.t_us = a.at("t_us").get<std::uint64_t>();
    cfg.arrivals.push_back(ar);
  }
  if (j.contains("ao_decrypt_at_us"))
    cfg.ao_decrypt_at_us = j.at("ao_decrypt_at_us").get<std::vector<std::uint64_t>>();

  if (cfg.n == 0 || cfg.k == 0 || cfg.k > cfg.n)
    throw std::invalid_argument("need 1 <= k <= n");
  if (cfg.msg_bytes == 0 || cfg.msg_bytes > kMaxPayloadBytes)
    throw std::invalid_argument("msg_bytes out of range");
  std::set<std::uint32_t> seen;
  for (const auto& a : cfg.arrivals) {
    if (a.ru < 1 || a.ru > cfg.n) throw std::invalid_argument("arrival names an unknown unit");
    if (!seen.insert(a.ru).second) throw std::invalid_argument("unit arrives twice");
  }

  // catch label and policy mistakes at parse time, not mid-round
  AttributeUniverse uni(cfg.universe);
  if (cfg.area.empty()) throw std::invalid_argument("empty area attribute set");
  for (const auto& label : cfg.area) uni.id_of(label);
  parse_policy(cfg.policy_json, uni);
  return cfg;
}

ScenarioSummary run_scenario(const ScenarioConfig& cfg, std::ostream& transcript) {
  Emitter emit{transcript};
  ScenarioSummary summary;
  OpDelta whole_run;

  DetRng root(cfg.seed);
  DetRng setup_rng = root.fork("setup");
  DetRng key_rng = root.fork("keys");
  DetRng round_rng = root.fork("round");
  AeadKey group_key = root.fork("group-key").key32();

  AttributeUniverse universe(cfg.universe);
  auto authority = Authority<B>::create(universe, setup_rng);
  EncryptContext<B> ctx(authority.pk());
  PolicyNode policy = parse_policy(cfg.policy_json, universe);
  DecryptionKey<B> ao_key = authority.issue(policy, key_rng);

  std::vector<std::uint32_t> gamma;
  for (const auto& label : cfg.area) gamma.push_back(universe.id_of(label));

  emit.line(0, "system", "setup",
            json{{"backend", B::kName},
                 {"n", cfg.n},
                 {"k", cfg.k},
                 {"tp_us", cfg.tp_us},
                 {"msg_bytes", cfg.msg_bytes},
                 {"universe_digest", universe.digest()},
                 {"policy_digest", policy_digest(policy, universe)},
                 {"area", cfg.area}});

  // registration: every unit commits a secret and gets its evaluation point
  std::vector<B::Scalar> roster;
  std::map<std::uint32_t, RuRound> units;
  std::map<std::uint32_t, Bytes> payloads;
  for (std::uint32_t id = 1; id <= cfg.n; ++id) {
    DetRng ru_rng = round_rng.fork("ru." + std::to_string(id));
    RuRound st;
    st.s = B::Scalar::sample_nonzero(ru_rng);
    st.cid = register_cid<B>(roster, group_key, ru_rng, B::G1::generator().exp(st.s));
    Bytes payload(cfg.msg_bytes);
    round_rng.fork("payload." + std::to_string(id)).fill(payload.data(), payload.size());
    payloads[id] = std::move(payload);
    emit.line(0, "RU" + std::to_string(id), "register",
              json{{"x", scalar_hex(st.cid.x)}, {"cid_digest", digest_hex(st.cid.sealed)}});
    units.emplace(id, std::move(st));
  }
  emit.line(0, "CA", "roster_complete", json{{"count", roster.size()}});

  // merge arrivals and operator requests into one time-ordered queue;
  // ties resolve arrivals first, then by unit id
  struct Event {
    std::uint64_t t;
    int kind;  // 0 arrival, 1 operator request
    std::uint32_t ru;
    std::size_t ao_index;
  };
  std::vector<Event> queue;
  for (const auto& a : cfg.arrivals) queue.push_back({a.t_us, 0, a.ru, 0});
  for (std::size_t i = 0; i < cfg.ao_decrypt_at_us.size(); ++i)
    queue.push_back({cfg.ao_decrypt_at_us[i], 1, 0, i});
  std::stable_sort(queue.begin(), queue.end(), [](const Event& a, const Event& b) {
    return std::tie(a.t, a.kind, a.ru) < std::tie(b.t, b.kind, b.ru);
  });

  std::vector<std::uint32_t> pending_batch;  // accepted, waiting for quorum
  std::optional<B::Gt> round_value;
  std::uint64_t batch_time = 0;
  std::vector<std::pair<std::uint32_t, FinishedCiphertext<B>>> finished;
  std::map<std::uint32_t, PreDecryptedCiphertext<B>> predecrypted;

  auto build_semi = [&](std::uint32_t id, bool batch_member) {
    const RuRound& st = units.at(id);
    DetRng enc_rng = round_rng.fork("enc." + std::to_string(id));
    return ru_encrypt(ctx, gamma, payloads.at(id), st.s, st.h, st.cid, batch_member, enc_rng);
  };

  auto form_batch = [&](std::uint64_t now) {
    // quorum reached: the pending units become the round's contributors
    std::vector<Contribution<B>> contribs;
    for (auto id : pending_batch) {
      DetRng share_rng = round_rng.fork("share." + std::to_string(id));
      contribs.push_back(gen_contribution<B>(share_rng, cfg.k, units.at(id).s));
      emit.line(now, "RU" + std::to_string(id), "share_exchange",
                json{{"recipients", roster.size()}});
    }
    // every registered unit aggregates its own point of h = sum f_i
    for (auto& [id, st] : units) {
      std::vector<B::Scalar> incoming;
      for (const auto& c : contribs) incoming.push_back(c.f.eval(st.cid.x));
      st.h = aggregate_h<B>(incoming, cfg.k);
      st.has_h = true;
    }

    std::vector<SemiCiphertext<B>> semis;
    for (auto id : pending_batch) {
      semis.push_back(build_semi(id, true));
      emit.line(now, "RU" + std::to_string(id), "submit",
                json{{"state", "semi"}, {"batch", true},
                     {"payload_digest", digest_hex(payloads.at(id))}});
    }

    OpDelta d;
    auto [fin, value] = ca_finalize_batch(semis, cfg.k);
    round_value = value;
    batch_time = now;
    for (std::size_t i = 0; i < fin.size(); ++i)
      finished.emplace_back(pending_batch[i], std::move(fin[i]));
    summary.batch_finalized = true;
    emit.line(now, "CA", "batch_finalized",
              json{{"count", cfg.k}, {"ops", ops_json(d.take())}});
  };

  for (const Event& ev : queue) {
    if (ev.kind == 0) {
      std::string role = "RU" + std::to_string(ev.ru);
      if (ev.t > cfg.tp_us) {
        // the transaction period is closed; the aggregator refuses the unit
        ++summary.rejected;
        emit.line(ev.t, "CA", "rejected_late", json{{"ru", ev.ru}});
        continue;
      }
      emit.line(ev.t, role, "arrived", json{});
      if (!round_value) {
        pending_batch.push_back(ev.ru);
        if (pending_batch.size() == cfg.k) form_batch(ev.t);
      } else {
        // delayed path: fresh secret, same round polynomial, no helper
        SemiCiphertext<B> semi = build_semi(ev.ru, false);
        emit.line(ev.t, role, "submit",
                  json{{"state", "semi"}, {"batch", false},
                       {"payload_digest", digest_hex(payloads.at(ev.ru))}});
        OpDelta d;
        FinishedCiphertext<B> fin = ca_finalize_delayed(semi, round_value, roster);
        OpCounts used = d.take();
        finished.emplace_back(ev.ru, std::move(fin));
        emit.line(ev.t, "CA", "delayed_finalized",
                  json{{"ru", ev.ru}, {"ops", ops_json(used)}});
      }
    } else {
      if (!round_value || ev.t < batch_time) {
        emit.line(ev.t, "AO", "decrypt_unavailable",
                  json{{"reason", "batch not finalized"}});
        continue;
      }
      // the pre-decryption service handles anything finished it has not
      // seen yet, then the operator decrypts everything available
      std::size_t fresh = 0;
      OpDelta cd_delta;
      for (const auto& [id, fin] : finished) {
        if (predecrypted.count(id)) continue;
        predecrypted.emplace(id, cd_predecrypt(fin, group_key, authority.pk()));
        ++fresh;
      }
      emit.line(ev.t, "CD", "predecrypt",
                json{{"fresh", fresh}, {"total", predecrypted.size()},
                     {"ops", ops_json(cd_delta.take())}});

      std::vector<std::uint32_t> ids;
      std::vector<PreDecryptedCiphertext<B>> cts;
      for (const auto& [id, ct] : predecrypted) {
        ids.push_back(id);
        cts.push_back(ct);
      }
      OpDelta ao_delta;
      auto results = ao_decrypt(cts, ao_key, cfg.k);
      json rows = json::array();
      std::size_t ok = 0;
      for (std::size_t i = 0; i < results.size(); ++i) {
        bool match = results[i] && *results[i] == payloads.at(ids[i]);
        if (match) ++ok;
        rows.push_back(json{{"ru", ids[i]},
                            {"ok", bool(results[i])},
                            {"match", match}});
      }
      summary.recovered = std::max(summary.recovered, ok);
      emit.line(ev.t, "AO", "decrypt",
                json{{"requested", cts.size()}, {"recovered", ok},
                     {"results", std::move(rows)}, {"ops", ops_json(ao_delta.take())}});
    }
  }

  std::uint64_t end_t = cfg.tp_us;
  for (const Event& ev : queue) end_t = std::max(end_t, ev.t);

  if (!summary.batch_finalized) {
    // quorum never formed inside the window; the round is stalled by design
    emit.line(end_t, "CA", "stalled",
              json{{"accepted", pending_batch.size()}, {"needed", cfg.k}});
  }

  summary.finished = finished.size();
  summary.ops = whole_run.take();
  emit.line(end_t, "system", "summary",
            json{{"batch_finalized", summary.batch_finalized},
                 {"finished", summary.finished},
                 {"rejected", summary.rejected},
                 {"recovered", summary.recovered},
                 {"ops", ops_json(summary.ops)}});
  return summary;
}

}  // namespace gridabe
