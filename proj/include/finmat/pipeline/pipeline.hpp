#pragma once

#include "finmat/realize/realize.hpp"
#include "finmat/schurbound/schur.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace finmat {

struct EnumerateOptions {
  int jobs = 1;
  std::string cache_dir;  // empty disables caching
  bool extended = false;  // allow n = 4, 5 over Q
  std::ostream* log = nullptr;  // progress lines, one per phase and per iso type
};

// Always-on checks counted during a run; not part of the serialized report.
struct RunStats {
  long subgroups = 0;
  long iso_types = 0;
  long tables_verified = 0;
  long projectors_checked = 0;
  long cache_hits = 0;
  double seconds = 0;
};

struct EnumerationReport {
  int n = 0;
  FieldDescriptor field;
  SchurBoundBreakdown schur;
  ReductionPrime reduction;
  long gl_count = 0;
  long sl_count = 0;
  std::vector<RealizedSubgroup> entries;
  std::vector<std::string> iso_multiset;
  RunStats stats;
};

// Finite subgroups of GL_n(K) up to conjugacy, with explicit generators.
EnumerationReport enumerate(int n, const FieldDescriptor& K, const EnumerateOptions& opt = {});

struct EntryMatch {
  std::string iso_label;
  long order = 0;
  std::vector<std::string> character;
};

struct ReportDiff {
  std::vector<std::string> only_in_a;  // iso-label multiset difference a - b
  std::vector<std::string> only_in_b;
  std::vector<EntryMatch> unmatched_a;  // entries of a with no character-equivalent entry in b
  std::vector<EntryMatch> unmatched_b;
  bool empty() const { return only_in_a.empty() && only_in_b.empty() && unmatched_a.empty() && unmatched_b.empty(); }
};

// The abstract group behind an entry's abstract_ref, when present in the cache.
std::optional<FiniteGroup> cached_group(const std::string& cache_dir, const std::string& ref);

ReportDiff diff_reports(const EnumerationReport& a, const EnumerationReport& b);

}  // namespace finmat
