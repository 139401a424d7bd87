#include "finmat/pipeline/pipeline.hpp"

#include "finmat/chars/char_table.hpp"
#include "finmat/chars/characters.hpp"
#include "finmat/errors.hpp"
#include "finmat/groups/search.hpp"
#include "finmat/groups/subgroups.hpp"
#include "finmat/pipeline/cache.hpp"
#include "finmat/pipeline/report.hpp"
#include "finmat/pipeline/seeds.hpp"
#include "finmat/realize/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace finmat {

namespace {

nlohmann::json mat_json(const MatFp& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.n; ++i) {
    std::vector<long> r;
    for (int j = 0; j < m.n; ++j) r.push_back(m.at(i, j));
    rows.push_back(r);
  }
  return rows;
}

MatFp mat_from_json(const nlohmann::json& j, int p) {
  return MatFp::from_rows(p, j.get<std::vector<std::vector<long>>>());
}

// Subgroups are stored by generator matrices and always rebuilt from them, so element
// numbering does not depend on whether the list came from the cache.
nlohmann::json groups_json(const std::vector<FiniteGroup>& gs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& G : gs) {
    nlohmann::json gens = nlohmann::json::array();
    for (int g : G.generators()) gens.push_back(mat_json(G.matrix(g)));
    a.push_back(gens);
  }
  return a;
}

std::vector<FiniteGroup> groups_from_json(const nlohmann::json& a, int p, int n) {
  std::vector<FiniteGroup> out;
  for (const auto& gens : a) {
    std::vector<MatFp> ms;
    for (const auto& m : gens) ms.push_back(mat_from_json(m, p));
    if (ms.empty()) ms.push_back(MatFp::identity(p, n));
    out.push_back(FiniteGroup::from_matrices(ms));
  }
  return out;
}

struct TypeResult {
  std::vector<RealizedSubgroup> entries;
  long projectors = 0;
  bool cached = false;
};

TypeResult process_type(const FiniteGroup& G, const FieldDescriptor& K, int n) {
  TypeResult res;
  auto T = character_table(G);
  auto orbits = galois_orbits(T, K);
  std::vector<int> m(orbits.size(), 1);
  // With every Schur index at 1 the candidate set is largest; empty means no embedding.
  auto loose = candidate_sums(T, orbits, n, m, false);
  if (loose.empty()) return res;
  std::vector<char> used(orbits.size(), 0);
  for (const auto& c : loose)
    for (auto [o, k] : c.summands) used[o] = 1;
  std::vector<OrbitRealization> mods(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (!used[o]) {
      m[o] = n + 1;
      continue;
    }
    auto e = isotypic_idempotent(G, T, orbits[o], K);
    if (!projector_checks(G, e)) throw InvariantViolation("isotypic idempotent fails e^2 = e or centrality");
    ++res.projectors;
    mods[o] = realize_orbit(G, T, orbits, static_cast<int>(o), K, n);
    m[o] = mods[o].schur;
  }
  auto cands = candidate_sums(T, orbits, n, m, false);
  if (cands.empty()) return res;
  cands = dedup_by_aut(orbits, m, std::move(cands), automorphism_generators(G));
  std::string label = iso_label(G);
  for (const auto& c : cands) {
    auto R = assemble(G, T, orbits, c, mods, K);
    if (R.is_sl != determinant_trivial(T, orbits, c, m))
      throw InvariantViolation("determinant character disagrees with generator determinants");
    R.iso_label = label;
    res.entries.push_back(std::move(R));
  }
  std::sort(res.entries.begin(), res.entries.end(),
            [](const RealizedSubgroup& a, const RealizedSubgroup& b) { return a.character < b.character; });
  return res;
}

std::string group_key_part(const FiniteGroup& G) {
  return groups_json({G}).dump();
}

}  // namespace

EnumerationReport enumerate(int n, const FieldDescriptor& K, const EnumerateOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (n < 1) throw UnsupportedBound("dimension must be positive");
  if (!K.supported_target()) throw UnsupportedField("unsupported field " + K.name());
  if (n > kMaxDim) throw UnsupportedBound("dimension exceeds the F_p matrix limit");
  if (n > 3 && !(K.is_rationals() && opt.extended && n <= 5))
    throw UnsupportedBound("n > 3 needs --extended and K = Q");

  EnumerationReport rep;
  rep.n = n;
  rep.field = K;
  rep.schur = schur_number(n, K);
  rep.reduction = reduction_prime(K, rep.schur);
  if (!rep.schur.value.fits_slong_p()) throw UnsupportedBound("Schur bound too large");
  long bound = rep.schur.value.get_si();
  int p = static_cast<int>(rep.reduction.p);
  int jobs = std::max(1, opt.jobs);

  Cache cache = opt.cache_dir.empty() ? Cache() : Cache(opt.cache_dir);
  std::string base = std::string(kCacheVersion) + "|" + std::to_string(n) + "|" + K.name() + "|" + std::to_string(p);

  // Subgroups of GL_n(F_q) up to conjugacy.
  std::vector<FiniteGroup> subs;
  std::string skey = Cache::key({base, "subgroups", std::to_string(bound)});
  if (auto hit = cache.get(skey)) {
    subs = groups_from_json(*hit, p, n);
    ++rep.stats.cache_hits;
  } else {
    SubgroupOptions so;
    so.jobs = jobs;
    so.seeds = perfect_seeds(n, K, bound, rep.reduction);
    auto j = groups_json(enumerate_subgroups(n, p, bound, so));
    cache.put(skey, j);
    subs = groups_from_json(j, p, n);
  }
  rep.stats.subgroups = static_cast<long>(subs.size());
  std::mutex log_mu;
  auto say = [&](const std::string& msg) {
    if (!opt.log) return;
    std::lock_guard<std::mutex> lk(log_mu);
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    *opt.log << "[" << K.name() << " n=" << n << " " << t << "s] " << msg << std::endl;
  };
  say(std::to_string(subs.size()) + " subgroup classes in GL_n(F_" + std::to_string(p) + ")");

  // Isomorphism types, first occurrence as representative.
  std::vector<int> reps;
  std::vector<IsoInvariants> inv;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto iv = iso_invariants(subs[i]);
    bool found = false;
    for (std::size_t r = 0; r < reps.size() && !found; ++r)
      found = inv[r] == iv && are_isomorphic(subs[reps[r]], subs[i]);
    if (!found) {
      reps.push_back(static_cast<int>(i));
      inv.push_back(iv);
    }
  }
  rep.stats.iso_types = static_cast<long>(reps.size());
  say(std::to_string(reps.size()) + " isomorphism types");

  std::vector<TypeResult> results(reps.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t t = next++;
      if (t >= reps.size()) return;
      try {
        const auto& G = subs[reps[t]];
        std::string key = Cache::key({base, "type", group_key_part(G)});
        if (auto hit = cache.get(key)) {
          for (const auto& e : hit->at("entries")) results[t].entries.push_back(entry_from_json(e, K));
          for (auto& e : results[t].entries) e.abstract_ref = key;
          results[t].projectors = hit->at("projectors").get<long>();
          results[t].cached = true;
          continue;
        }
        auto ts = std::chrono::steady_clock::now();
        say("type " + std::to_string(t) + " order " + std::to_string(G.order()) + ": started");
        results[t] = process_type(G, K, n);
        say("type " + std::to_string(t) + " order " + std::to_string(G.order()) + ": " +
            std::to_string(results[t].entries.size()) + " entries, " +
            std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - ts).count()) + "s");
        for (auto& e : results[t].entries) e.abstract_ref = key;
        nlohmann::json j = {{"entries", nlohmann::json::array()},
                            {"projectors", results[t].projectors},
                            {"p", p},
                            {"group", groups_json({G}).at(0)}};
        for (const auto& e : results[t].entries) j["entries"].push_back(entry_to_json(e));
        cache.put(key, j);
      } catch (...) {
        std::lock_guard<std::mutex> lk(fail_mu);
        if (!failure) failure = std::current_exception();
        next = reps.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& r : results) {
    rep.stats.projectors_checked += r.projectors;
    rep.stats.cache_hits += r.cached;
    for (auto& e : r.entries) rep.entries.push_back(std::move(e));
  }
  rep.stats.tables_verified = rep.stats.iso_types;
  // Per-type lists are already in character order, so a stable sort gives the full key.
  std::stable_sort(rep.entries.begin(), rep.entries.end(), [](const RealizedSubgroup& a, const RealizedSubgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.iso_label < b.iso_label;
  });
  for (const auto& e : rep.entries) {
    if (bound % e.order != 0) throw InvariantViolation("entry order does not divide the Schur bound");
    rep.iso_multiset.push_back(e.iso_label);
    rep.sl_count += e.is_sl;
  }
  rep.gl_count = static_cast<long>(rep.entries.size());
  rep.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

// Class-order-independent fingerprint of a character: sorted (order, size, value) triples.
std::vector<std::string> character_signature(const RealizedSubgroup& e) {
  auto vals = entry_to_json(e).at("character").get<std::vector<std::string>>();
  std::vector<std::string> sig;
  for (std::size_t c = 0; c < vals.size(); ++c)
    sig.push_back(std::to_string(e.class_orders[c]) + ":" + std::to_string(e.class_sizes[c]) + ":" + vals[c]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::optional<FiniteGroup> cached_group(const std::string& cache_dir, const std::string& ref) {
  Cache cache(cache_dir);
  auto hit = cache.get(ref);
  if (!hit || !hit->contains("group")) return std::nullopt;
  int p = hit->at("p").get<int>();
  std::vector<MatFp> ms;
  for (const auto& m : hit->at("group")) ms.push_back(mat_from_json(m, p));
  if (ms.empty()) ms.push_back(MatFp::identity(p, 1));
  return FiniteGroup::from_matrices(ms);
}

ReportDiff diff_reports(const EnumerationReport& a, const EnumerationReport& b) {
  ReportDiff d;
  auto la = a.iso_multiset, lb = b.iso_multiset;
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(d.only_in_a));
  std::set_difference(lb.begin(), lb.end(), la.begin(), la.end(), std::back_inserter(d.only_in_b));
  // Restore report order for readability.
  auto reorder = [](std::vector<std::string>& v, const std::vector<std::string>& order) {
    std::vector<std::string> out;
    std::multiset<std::string> want(v.begin(), v.end());
    for (const auto& s : order)
      if (auto it = want.find(s); it != want.end()) {
        out.push_back(s);
        want.erase(it);
      }
    v = out;
  };
  reorder(d.only_in_a, a.iso_multiset);
  reorder(d.only_in_b, b.iso_multiset);

  using Key = std::pair<std::string, std::vector<std::string>>;
  auto keyed = [](const EnumerationReport& r) {
    std::multiset<Key> s;
    for (const auto& e : r.entries) s.insert({e.iso_label, character_signature(e)});
    return s;
  };
  auto ka = keyed(a), kb = keyed(b);
  auto unmatched = [](const EnumerationReport& r, std::multiset<Key> other) {
    std::vector<EntryMatch> out;
    for (const auto& e : r.entries) {
      Key k{e.iso_label, character_signature(e)};
      if (auto it = other.find(k); it != other.end()) {
        other.erase(it);
        continue;
      }
      out.push_back({e.iso_label, e.order, entry_to_json(e).at("character").get<std::vector<std::string>>()});
    }
    return out;
  };
  d.unmatched_a = unmatched(a, kb);
  d.unmatched_b = unmatched(b, ka);
  return d;
}

}  // namespace finmat
