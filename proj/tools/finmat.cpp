#include "CLI11.hpp"
#include "json.hpp"

#include "finmat/chars/char_table.hpp"
#include "finmat/errors.hpp"
#include "finmat/groups/subgroups.hpp"
#include "finmat/pipeline/pipeline.hpp"
#include "finmat/pipeline/report.hpp"
#include "finmat/pipeline/seeds.hpp"
#include "finmat/realize/structure.hpp"
#include "finmat/schurbound/schur.hpp"
#include "finmat/weilres/weil.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace finmat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsupported = 2;
constexpr int kExitInvariant = 3;

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return nlohmann::json::parse(in);
}

// "1,1;0,1" -> rows over F_p.
MatFp parse_fp_matrix(const std::string& s, int p) {
  std::vector<std::vector<long>> rows;
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    rows.emplace_back();
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) rows.back().push_back(std::stol(e));
  }
  return MatFp::from_rows(p, rows);
}

// One matrix row per non-empty line, entries separated by whitespace.
CycMatrix read_cyc_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  CycMatrix A;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<CycNum> row;
    std::string tok;
    while (ls >> tok) row.push_back(CycNum::parse(tok));
    if (!row.empty()) A.push_back(std::move(row));
  }
  if (A.empty()) throw ParseError("empty matrix file " + path);
  for (const auto& r : A)
    if (r.size() != A.size()) throw ParseError("matrix is not square");
  return A;
}

// "Q(zeta_N)" or a quadratic field.
ExtensionBasis parse_extension(const std::string& L, const FieldDescriptor& K) {
  const std::string pre = "Q(zeta_";
  if (L.rfind(pre, 0) == 0 && L.back() == ')') return cyclotomic_basis(std::stol(L.substr(pre.size())), K);
  auto F = FieldDescriptor::parse(L);
  if (!K.is_rationals()) throw ParseError("a quadratic extension restricts to Q only");
  return quadratic_basis(F);
}

void print_table(const CharacterTable& T) {
  std::cout << "order " << T.group_order << ", " << T.num_classes() << " classes\n";
  std::cout << "class sizes:";
  for (const auto& c : T.classes) std::cout << ' ' << c.size;
  std::cout << "\nelement orders:";
  for (const auto& c : T.classes) std::cout << ' ' << c.order;
  std::cout << "\n";
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    std::cout << "chi" << i + 1 << ":";
    for (const auto& v : T.rows[i].values) std::cout << ' ' << v.str();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subgroups of GL_n over Q and imaginary quadratic fields"};
  app.require_subcommand(1);

  int n = 3, jobs = 1;
  std::string field = "Q", format = "table", cache_dir, output;
  bool sl_only = false, extended = false, verbose = false;
  auto* en = app.add_subcommand("enumerate", "classify finite subgroups of GL_n(K) up to conjugacy");
  en->add_option("--n", n, "matrix size")->required();
  en->add_option("--field", field, "Q or Q(sqrt(-D))")->required();
  en->add_flag("--sl-only", sl_only, "table output lists SL entries only");
  en->add_flag("--extended", extended, "allow n = 4, 5 over Q");
  en->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  en->add_option("--cache", cache_dir, "cache directory");
  en->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  en->add_option("--output", output, "write to file instead of stdout");
  en->add_flag("--verbose", verbose, "progress on stderr");

  std::string fa, fb;
  auto* df = app.add_subcommand("diff", "compare two JSON reports");
  df->add_option("a", fa)->required();
  df->add_option("b", fb)->required();

  auto* sb = app.add_subcommand("schur-bound", "Schur bound S(n,K) and the reduction prime");
  sb->add_option("--n", n)->required();
  sb->add_option("--field", field)->required();

  long q = 0, bound = 0;
  auto* sg = app.add_subcommand("subgroups", "subgroups of GL_n(F_q) of order dividing a bound");
  sg->add_option("--n", n)->required();
  sg->add_option("--q", q, "prime")->required();
  sg->add_option("--bound", bound)->required();
  sg->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  int p = 0;
  std::vector<std::string> gens;
  std::string group_ref;
  auto* ct = app.add_subcommand("char-table", "character table of a matrix group over F_p");
  ct->add_option("--p", p, "prime");
  ct->add_option("--gen", gens, "generator, rows ';' and entries ',' separated");
  ct->add_option("--group", group_ref, "abstract_ref of a report entry");
  ct->add_option("--cache", cache_dir, "cache directory holding the reference");

  std::string from, to = "Q", matrix_file;
  auto* wr = app.add_subcommand("weil-res", "restriction of scalars of a matrix from L to K");
  wr->add_option("--from", from, "Q(zeta_N) or Q(sqrt(-D))")->required();
  wr->add_option("--to", to, "subfield K");
  wr->add_option("--matrix", matrix_file, "one row per line, cyclotomic entries")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      EnumerateOptions opt;
      opt.jobs = jobs;
      opt.cache_dir = cache_dir;
      opt.extended = extended;
      if (verbose) opt.log = &std::cerr;
      auto rep = enumerate(n, FieldDescriptor::parse(field), opt);
      std::cerr << "enumerate: " << rep.stats.subgroups << " subgroups, " << rep.stats.iso_types << " iso types, "
                << rep.stats.seconds << " s, cache hits " << rep.stats.cache_hits << "\n";
      std::string text = format == "json" ? report_to_json(rep).dump(1) + "\n" : report_to_table(rep, sl_only);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        out << text;
      }
    } else if (*df) {
      auto d = diff_reports(report_from_json(read_json(fa)), report_from_json(read_json(fb)));
      std::cout << diff_to_json(d).dump(1) << "\n";
    } else if (*sb) {
      auto K = FieldDescriptor::parse(field);
      auto S = schur_number(n, K);
      auto rp = reduction_prime(K, S);
      std::cout << "S(" << n << ", " << K.name() << ") = " << S.value.get_str() << "\n";
      for (const auto& l : S.locals)
        std::cout << "  l = " << l.l << ": m = " << l.m << ", t = " << l.t << ", exponent " << l.exponent << "\n";
      std::cout << "reduction prime p = " << rp.p << ", q = " << rp.residue_size << ", e = " << rp.ramification
                << ", f = " << rp.residue_degree << "\n";
    } else if (*sg) {
      SubgroupOptions so;
      so.jobs = jobs;
      auto subs = enumerate_subgroups(n, q, bound, so);
      std::map<int, int> by_order;
      for (const auto& G : subs) ++by_order[G.order()];
      std::cout << subs.size() << " conjugacy classes\n";
      for (auto [o, c] : by_order) std::cout << "  order " << o << ": " << c << "\n";
    } else if (*ct) {
      FiniteGroup G;
      if (!group_ref.empty()) {
        auto g = cached_group(cache_dir, group_ref);
        if (!g) throw ParseError("reference " + group_ref + " not found in cache '" + cache_dir + "'");
        G = *g;
      } else {
        if (p == 0 || gens.empty()) throw ParseError("char-table needs --group or --p with --gen");
        std::vector<MatFp> ms;
        for (const auto& s : gens) ms.push_back(parse_fp_matrix(s, p));
        G = FiniteGroup::from_matrices(ms);
      }
      std::cout << iso_label(G) << "\n";
      print_table(character_table(G));
    } else if (*wr) {
      auto K = FieldDescriptor::parse(to);
      auto B = parse_extension(from, K);
      auto R = res_matrix(read_cyc_matrix(matrix_file), B);
      std::cout << R.str(K);
    }
  } catch (const UnsupportedBound& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const UnsupportedField& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
