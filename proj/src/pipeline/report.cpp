#include "finmat/pipeline/report.hpp"

#include "finmat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace finmat {

namespace {

std::string compact(const QuadElem& x, const FieldDescriptor& K) {
  std::string s = x.str(K), out;
  for (char c : s)
    if (c != ' ') out.push_back(c);
  return out;
}

std::vector<std::string> character_strings(const Character& chi, const FieldDescriptor& K) {
  std::vector<std::string> out;
  for (const auto& v : chi.values) out.push_back(compact(QuadElem::from_cyc(v, K), K));
  return out;
}

}  // namespace

nlohmann::json entry_to_json(const RealizedSubgroup& R) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : R.generators) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < g.cols(); ++j) row.push_back(compact(g.at(i, j), R.field));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  return {{"order", R.order},
          {"iso_label", R.iso_label},
          {"is_sl", R.is_sl},
          {"field", R.field.name()},
          {"generators", gens},
          {"character", character_strings(R.character, R.field)},
          {"class_sizes", R.class_sizes},
          {"class_orders", R.class_orders},
          {"abstract_ref", R.abstract_ref}};
}

RealizedSubgroup entry_from_json(const nlohmann::json& j, const FieldDescriptor& K) {
  RealizedSubgroup R;
  R.field = K;
  R.order = j.at("order").get<long>();
  R.iso_label = j.at("iso_label").get<std::string>();
  R.is_sl = j.at("is_sl").get<bool>();
  for (const auto& g : j.at("generators")) {
    std::vector<std::vector<QuadElem>> rows;
    for (const auto& row : g) {
      rows.emplace_back();
      for (const auto& x : row) rows.back().push_back(QuadElem::parse(x.get<std::string>(), K));
    }
    R.generators.push_back(KMatrix::from_rows(rows));
  }
  R.n = R.generators.empty() ? 0 : R.generators.front().rows();
  for (const auto& v : j.at("character")) R.character.values.push_back(QuadElem::parse(v.get<std::string>(), K).to_cyc(K));
  R.class_sizes = j.at("class_sizes").get<std::vector<long>>();
  R.class_orders = j.at("class_orders").get<std::vector<int>>();
  R.abstract_ref = j.value("abstract_ref", std::string());
  return R;
}

nlohmann::json report_to_json(const EnumerationReport& r) {
  nlohmann::json locals = nlohmann::json::array();
  for (const auto& l : r.schur.locals) locals.push_back({{"l", l.l}, {"m", l.m}, {"t", l.t}, {"exponent", l.exponent}});
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) entries.push_back(entry_to_json(e));
  return {{"n", r.n},
          {"field", r.field.name()},
          {"schur_bound", {{"value", r.schur.value.get_str()}, {"locals", locals}}},
          {"reduction", {{"p", r.reduction.p},
                         {"q", r.reduction.residue_size},
                         {"e", r.reduction.ramification},
                         {"f", r.reduction.residue_degree}}},
          {"gl_count", r.gl_count},
          {"sl_count", r.sl_count},
          {"iso_multiset", r.iso_multiset},
          {"entries", entries}};
}

EnumerationReport report_from_json(const nlohmann::json& j) {
  EnumerationReport r;
  r.n = j.at("n").get<int>();
  r.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  r.schur = schur_number(r.n, r.field);
  if (r.schur.value.get_str() != j.at("schur_bound").at("value").get<std::string>())
    throw ParseError("report Schur bound does not match this build");
  r.reduction = reduction_prime(r.field, r.schur);
  r.gl_count = j.at("gl_count").get<long>();
  r.sl_count = j.at("sl_count").get<long>();
  r.iso_multiset = j.at("iso_multiset").get<std::vector<std::string>>();
  for (const auto& e : j.at("entries")) r.entries.push_back(entry_from_json(e, r.field));
  return r;
}

std::string report_to_table(const EnumerationReport& r, bool sl_only) {
  std::ostringstream os;
  os << "GL(" << r.n << ", " << r.field.name() << "): Schur bound " << r.schur.value.get_str() << ", reduction mod "
     << r.reduction.p << " (q = " << r.reduction.residue_size << ")\n";
  os << "  subgroups: " << r.gl_count << "   in SL: " << r.sl_count << "\n";
  std::size_t k = 0;
  for (const auto& e : r.entries) {
    ++k;
    if (sl_only && !e.is_sl) continue;
    os << "\n#" << k << "  " << e.iso_label << "  order " << e.order << (e.is_sl ? "  SL" : "") << "\n  character:";
    for (const auto& v : character_strings(e.character, r.field)) os << ' ' << v;
    os << "\n";
    for (const auto& g : e.generators) {
      std::istringstream lines(g.str(r.field));
      std::string line;
      while (std::getline(lines, line)) os << "    " << line << "\n";
      os << "\n";
    }
  }
  return os.str();
}

nlohmann::json diff_to_json(const ReportDiff& d) {
  auto entries = [](const std::vector<EntryMatch>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : v) a.push_back({{"iso_label", e.iso_label}, {"order", e.order}, {"character", e.character}});
    return a;
  };
  return {{"only_in_a", d.only_in_a},
          {"only_in_b", d.only_in_b},
          {"unmatched_a", entries(d.unmatched_a)},
          {"unmatched_b", entries(d.unmatched_b)}};
}

}  // namespace finmat
