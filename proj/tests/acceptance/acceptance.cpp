// Acceptance runner: one PASS/FAIL line per criterion, detail lines indented above it.
// Exit status is 0 exactly when every gating criterion passes.

#include "CLI11.hpp"

#include "finmat/chars/char_table.hpp"
#include "finmat/chars/characters.hpp"
#include "finmat/errors.hpp"
#include "finmat/groups/search.hpp"
#include "finmat/groups/subgroups.hpp"
#include "finmat/pipeline/pipeline.hpp"
#include "finmat/pipeline/report.hpp"
#include "finmat/realize/lattice.hpp"
#include "finmat/realize/realize.hpp"
#include "finmat/schurbound/schur.hpp"
#include "finmat/weilres/weil.hpp"

#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace finmat;

namespace {

// Pinned budgets. Counts, bounds and character data are compared exactly.
constexpr double kBoundBudgetSeconds = 1.0;       // criteria 1 and 2, whole loop
constexpr double kFieldBudgetSeconds = 600.0;     // criterion 3, per field
constexpr double kGaussianBudgetSeconds = 3600.0; // criterion 3, Q(i)
constexpr int kResSamples = 100;                  // criterion 5
constexpr int kRegularOracleMaxOrder = 24;        // criterion 5

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  std::vector<std::string> notes;
  bool ok = true;
  void check(bool cond, const std::string& what) {
    notes.push_back(std::string(cond ? "  [ok]   " : "  [FAIL] ") + what);
    ok = ok && cond;
  }
  void info(const std::string& what) { notes.push_back("  [info] " + what); }
};

int g_failures = 0;

void report(int id, const std::string& title, const Criterion& c) {
  for (const auto& n : c.notes) std::cout << n << "\n";
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << std::endl;
  if (!c.ok) ++g_failures;
}

// Runs body, turning an escaping exception into a failed check.
void guarded(Criterion& c, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.check(false, what + " threw: " + e.what());
  }
}

FieldDescriptor field(long d) { return d == 0 ? FieldDescriptor::rationals() : FieldDescriptor::imag_quadratic(d); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << x;
  return os.str();
}

struct Runs {
  std::map<std::pair<int, long>, EnumerationReport> reports;
};

void criterion_schur() {
  Criterion c;
  struct Row {
    int n;
    long d;
    long want;
  };
  const std::vector<Row> rows{{2, 0, 24},   {3, 0, 48},   {4, 0, 5760}, {5, 0, 11520}, {3, 1, 384},
                              {3, 2, 96},   {3, 7, 336},  {3, 11, 48},  {3, 19, 48},   {3, 43, 48},
                              {3, 67, 48},  {3, 163, 48}, {3, 3, 1296}};
  auto t0 = Clock::now();
  std::vector<Integer> got;
  for (const auto& r : rows) got.push_back(schur_number(r.n, field(r.d)).value);
  double dt = since(t0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    c.check(got[i] == rows[i].want, "S(" + std::to_string(rows[i].n) + ", " + field(rows[i].d).name() + ") = " +
                                        got[i].get_str() + ", expected " + std::to_string(rows[i].want));
  c.info("the printed table lists 1286 for Q(sqrt(-3)); the bound formula gives 1296 = 2^4 * 3^4");
  c.check(dt < kBoundBudgetSeconds, "computed in " + fmt(dt) + " s (budget " + fmt(kBoundBudgetSeconds) + " s)");
  report(1, "Schur bounds", c);
}

void criterion_minkowski() {
  Criterion c;
  auto t0 = Clock::now();
  std::vector<std::pair<Integer, Integer>> v;
  for (int n = 1; n <= 8; ++n) v.emplace_back(minkowski_bound(n), schur_number(n, FieldDescriptor::rationals()).value);
  double dt = since(t0);
  for (int n = 1; n <= 8; ++n)
    c.check(v[n - 1].first == v[n - 1].second,
            "n = " + std::to_string(n) + ": Minkowski " + v[n - 1].first.get_str() + ", Schur " + v[n - 1].second.get_str());
  c.check(dt < kBoundBudgetSeconds, "computed in " + fmt(dt) + " s (budget " + fmt(kBoundBudgetSeconds) + " s)");
  report(2, "Minkowski bound equals S(n,Q)", c);
}

void criterion_counts(Runs& runs, int jobs, long& projectors, bool extended, const std::string& cache_dir) {
  Criterion c;
  struct Row {
    int n;
    long d;
    long gl, sl;
  };
  const std::vector<Row> rows{{2, 0, 10, 5},   {3, 0, 32, 11},  {3, 19, 40, 14}, {3, 11, 37, 13},
                              {3, 7, 41, 15},  {3, 2, 48, 16},  {3, 1, 178, 28}, {3, 43, 40, 14},
                              {3, 67, 40, 14}, {3, 163, 40, 14}};
  for (const auto& r : rows) {
    auto K = field(r.d);
    std::string name = "(" + std::to_string(r.n) + ", " + K.name() + ")";
    guarded(c, name, [&] {
      EnumerateOptions opt;
      opt.jobs = jobs;
      auto t0 = Clock::now();
      auto rep = enumerate(r.n, K, opt);
      double dt = since(t0);
      double budget = r.d == 1 ? kGaussianBudgetSeconds : kFieldBudgetSeconds;
      c.check(rep.gl_count == r.gl && rep.sl_count == r.sl,
              name + ": " + std::to_string(rep.gl_count) + "/" + std::to_string(rep.sl_count) + ", expected " +
                  std::to_string(r.gl) + "/" + std::to_string(r.sl));
      c.check(dt <= budget, name + " in " + fmt(dt) + " s (budget " + fmt(budget) + " s)");
      projectors += rep.stats.projectors_checked;
      runs.reports[{r.n, r.d}] = std::move(rep);
    });
  }
  const auto& ref = runs.reports[{3, 19}].iso_multiset;
  for (long d : {43L, 67L, 163L}) {
    auto a = runs.reports[{3, d}].iso_multiset, b = ref;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.check(!a.empty() && a == b, "iso multiset of " + field(d).name() + " equals that of Q(sqrt(-19))");
  }

  // Extended rows: reported, never gating.
  struct Ext {
    int n;
    long d;
    long gl, sl;
  };
  for (const auto& e : std::vector<Ext>{{3, 3, 352, 40}, {4, 0, 227, 106}, {5, 0, 955, 226}}) {
    auto K = field(e.d);
    std::string name = "extended (" + std::to_string(e.n) + ", " + K.name() + ")";
    // The Q(sqrt(-3)) row fits the default budget; the n = 4, 5 rows are attempted on request.
    if (!extended && e.n > 3) {
      c.info(name + ": skipped (pass --extended to attempt)");
      continue;
    }
    try {
      EnumerateOptions opt;
      opt.jobs = jobs;
      opt.extended = e.n > 3;
      opt.cache_dir = cache_dir;
      auto t0 = Clock::now();
      auto rep = enumerate(e.n, K, opt);
      bool match = rep.gl_count == e.gl && rep.sl_count == e.sl;
      c.info(name + ": " + std::to_string(rep.gl_count) + "/" + std::to_string(rep.sl_count) +
             (match ? " matches " : " differs from ") + std::to_string(e.gl) + "/" + std::to_string(e.sl) + " in " +
             fmt(since(t0)) + " s");
    } catch (const UnsupportedBound& ex) {
      c.info(name + ": unsupported, " + ex.what());
    } catch (const std::exception& ex) {
      c.info(name + ": error, " + ex.what());
    }
  }
  report(3, "subgroup counts", c);
}

void criterion_case_study(const Runs& runs) {
  Criterion c;
  auto K = FieldDescriptor::imag_quadratic(19);
  auto it = runs.reports.find({3, 19});
  if (it == runs.reports.end()) {
    c.check(false, "no (3, Q(sqrt(-19))) report");
    report(4, "Q(sqrt(-19)) case study", c);
    return;
  }
  const auto& rep = it->second;
  std::vector<const RealizedSubgroup*> top;
  for (const auto& e : rep.entries)
    if (e.order == 48) top.push_back(&e);
  std::multiset<std::string> labels;
  for (auto* e : top) labels.insert(e->iso_label);
  c.check(top.size() == 2, std::to_string(top.size()) + " entries of order 48");
  c.check(labels == std::multiset<std::string>{"C2xS4", "C2xSL(2,3)"}, "order-48 labels are C2xSL(2,3) and C2xS4");

  guarded(c, "C2 x SL(2,3) checks", [&] {
    auto G = oracle::c2_sl23();
    auto T = character_table(G);
    std::vector<std::vector<CycNum>> ours;
    for (const auto& r : T.rows) ours.push_back(r.values);
    auto ref = oracle::parse_rows(oracle::kRefTable);
    auto perm = match_tables(ref, ours);
    c.check(perm.has_value(), "14 x 14 table matches the displayed table up to row/column permutation");
    if (!perm) return;
    auto remap = [&](const std::vector<CycNum>& refrow) {
      Character ch;
      ch.values.resize(refrow.size());
      for (std::size_t j = 0; j < refrow.size(); ++j) ch.values[(*perm)[j]] = refrow[j];
      return ch;
    };
    Character chi7 = remap(ref[6]);
    for (long d : {0L, 19L}) {
      auto F = field(d);
      auto orbits = galois_orbits(T, F);
      int o7 = -1;
      for (std::size_t o = 0; o < orbits.size(); ++o)
        for (int i : orbits[o].members)
          if (T.rows[i] == chi7) o7 = static_cast<int>(o);
      int m = o7 < 0 ? -1 : schur_index(G, T, orbits, o7, F);
      long want = d == 0 ? 2 : 1;
      c.check(m == want, "schur_index(chi7, " + F.name() + ") = " + std::to_string(m));
    }
    auto orbits = galois_orbits(T, K);
    std::vector<int> m(orbits.size(), 1);
    auto cands = candidate_sums(T, orbits, 3, m);
    auto s27 = remap(oracle::parse_rows({"3 1 -3 -1 0 0 1 -1 2 0 0 -2 -2 2"})[0]);
    auto s28 = remap(oracle::parse_rows({"3 -3 1 -1 0 0 1 -1 2 -2 -2 0 0 2"})[0]);
    int found = 0;
    for (const auto& cc : cands) found += (cc.total == s27) + (cc.total == s28);
    c.check(found == 2, "faithful sums chi2+chi7 and chi2+chi8 are candidates");
    int kept = 0;
    for (const auto& cc : dedup_by_aut(cands, automorphism_generators(G))) kept += (cc.total == s27) + (cc.total == s28);
    c.check(kept == 1, "dedup_by_aut merges them into one class");

    auto rp = reduction_prime(K, schur_number(3, K));
    for (auto* e : top) {
      if (e->iso_label != "C2xSL(2,3)") continue;
      c.check(rp.p == 5, "reduction prime lies above 5");
      c.check(reduction_check(*e, rp), "reduction of the realized order-48 group mod the prime above 5 is injective");
      auto red = FiniteGroup::from_matrices(reduce_generators(e->generators, K, rp));
      c.check(are_isomorphic(red, G), "its image is isomorphic to C2 x SL(2,3)");
      c.check(!e->is_sl, "it contains -I, so it lies in GL_3 but not SL_3");
    }
  });
  report(4, "Q(sqrt(-19)) case study", c);
}

void criterion_properties(long projectors) {
  Criterion c;
  guarded(c, "character tables", [&] {
    int tables = 0, oracles = 0;
    bool all = true, reg = true;
    for (auto [n, q, bound] : std::vector<std::tuple<int, int, long>>{{3, 5, 48}, {3, 3, 48}, {2, 3, 24}, {2, 5, 24}}) {
      for (const auto& G : enumerate_subgroups(n, q, bound)) {
        auto T = character_table(G);
        long sq = 0;
        for (int d : T.degrees) sq += static_cast<long>(d) * d;
        all = all && verify_table(T) && sq == G.order();
        ++tables;
        if (G.order() <= kRegularOracleMaxOrder) {
          reg = reg && oracle::regular_oracle(G, T);
          ++oracles;
        }
      }
    }
    c.check(all, std::to_string(tables) + " tables: orthonormal rows, orthogonal columns, sum of squares = |G|");
    c.check(reg, std::to_string(oracles) + " tables agree with the regular-representation decomposition");
  });
  c.check(projectors > 0, std::to_string(projectors) + " isotypic idempotents checked idempotent and central during the runs");
  guarded(c, "restriction of scalars", [&] {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> dist(-3, 3);
    struct Ext {
      long N;
      FieldDescriptor K;
    };
    std::vector<Ext> exts{{4, FieldDescriptor::rationals()},       {5, FieldDescriptor::rationals()},
                          {12, FieldDescriptor::imag_quadratic(1)}, {8, FieldDescriptor::imag_quadratic(2)},
                          {7, FieldDescriptor::imag_quadratic(7)},  {12, FieldDescriptor::imag_quadratic(3)}};
    auto rnd = [&](long N, int n) {
      CycMatrix A(n, std::vector<CycNum>(n));
      for (auto& row : A)
        for (auto& v : row) {
          std::vector<Rational> co(N);
          for (auto& x : co) x = dist(rng);
          v = CycNum::from_powers(N, co);
        }
      return A;
    };
    int mult = 0, trace = 0;
    for (int s = 0; s < kResSamples; ++s) {
      const auto& e = exts[s % exts.size()];
      auto B = cyclotomic_basis(e.N, e.K);
      int n = 1 + s % 3;
      auto A = rnd(e.N, n), C = rnd(e.N, n);
      mult += res_matrix(cyc_mul(A, C), B) == res_matrix(A, B) * res_matrix(C, B);
      trace += res_trace_check(A, B);
    }
    c.check(mult == kResSamples, std::to_string(mult) + "/" + std::to_string(kResSamples) + " samples multiplicative");
    c.check(trace == kResSamples, std::to_string(trace) + "/" + std::to_string(kResSamples) + " samples satisfy the trace identity");
  });
  guarded(c, "subgroup oracle", [&] {
    int fast = static_cast<int>(enumerate_subgroups(2, 3, 24).size());
    int brute = oracle::brute_subgroup_classes(2, 3, 24);
    c.check(fast == brute, "enumerate_subgroups(2,3,24) = " + std::to_string(fast) + ", exhaustive GL(2,3) = " +
                               std::to_string(brute));
  });
  report(5, "property suites", c);
}

void criterion_determinism(int jobs) {
  Criterion c;
  guarded(c, "determinism", [&] {
    auto K = FieldDescriptor::imag_quadratic(19);
    EnumerateOptions a, b;
    a.jobs = 1;
    b.jobs = std::max(2, jobs);
    auto ja = report_to_json(enumerate(3, K, a)).dump(1);
    auto jb = report_to_json(enumerate(3, K, b)).dump(1);
    c.check(ja == jb, "jobs=1 and jobs=" + std::to_string(b.jobs) + " reports are byte-identical (" +
                          std::to_string(ja.size()) + " bytes)");
  });
  report(6, "determinism", c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string cache_dir;
  int jobs = static_cast<int>(std::max(2u, std::min(8u, std::thread::hardware_concurrency())));
  bool extended = false;
  app.add_option("--cache", cache_dir, "cache directory for extended rows");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--extended", extended, "also attempt the extended rows");
  CLI11_PARSE(app, argc, argv);

  Runs runs;
  long projectors = 0;
  criterion_schur();
  criterion_minkowski();
  criterion_counts(runs, jobs, projectors, extended, cache_dir);
  criterion_case_study(runs);
  criterion_properties(projectors);
  criterion_determinism(jobs);
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : std::to_string(g_failures) + " CRITERIA FAILED") << std::endl;
  return g_failures == 0 ? 0 : 1;
}
