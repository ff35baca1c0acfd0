// skeldet: build monomial ideals of multigraphs and matrices, count standard
// monomials, compute exact determinants and run the verification suites.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeldet/decomposition.hpp"
#include "skeldet/errors.hpp"
#include "skeldet/exact_linalg.hpp"
#include "skeldet/formulas.hpp"
#include "skeldet/lambda_seq.hpp"
#include "skeldet/monomial_ideal.hpp"
#include "skeldet/multigraph.hpp"
#include "skeldet/numeric.hpp"
#include "skeldet/report.hpp"
#include "skeldet/standard_count.hpp"
#include "skeldet/suites.hpp"

namespace {

using namespace skeldet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "text";
  std::string graph_file;
};

struct SourceOptions {
  std::string matrix_file;
  std::optional<std::size_t> skeleton;
  bool parking = false;
  std::vector<std::uint32_t> lambda;
  std::vector<std::uint64_t> inra;
};

void emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(global.out);
  if (!file) {
    throw std::runtime_error("cannot write '" + global.out + "'");
  }
  file << text;
}

Multigraph load_graph(const GlobalOptions& global) {
  if (global.graph_file.empty()) {
    throw UsageError("--graph-file is required");
  }
  return read_graph_file(global.graph_file);
}

/// JSON (array of rows) or whitespace-separated rows, one per line.
IntegerMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open matrix file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    const auto j = nlohmann::json::parse(text);
    return matrix_from_json(j.is_object() && j.contains("H") ? j.at("H") : j);
  }
  std::vector<std::vector<BigInt>> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream fields(line.substr(0, line.find('#')));
    std::vector<BigInt> row;
    std::string token;
    while (fields >> token) {
      try {
        row.push_back(parse_bigint(token));
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected an integer, got '" + token + "'");
      }
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
  }
  return IntegerMatrix(rows);
}

MonomialIdeal build_ideal(const GlobalOptions& global, const SourceOptions& source) {
  int chosen = (source.skeleton ? 1 : 0) + (source.parking ? 1 : 0) +
               (source.lambda.empty() ? 0 : 1) + (source.inra.empty() ? 0 : 1) +
               (source.matrix_file.empty() ? 0 : 1);
  if (chosen != 1) {
    throw UsageError(
        "choose exactly one of --skeleton, --parking, --lambda, --inra, --matrix-file");
  }
  if (source.skeleton) {
    return skeleton_ideal(load_graph(global), *source.skeleton);
  }
  if (source.parking) {
    return parking_ideal(load_graph(global));
  }
  if (!source.lambda.empty()) {
    return lambda_ideal(LambdaSeq(source.lambda));
  }
  if (!source.inra.empty()) {
    if (source.inra.size() != 3) {
      throw UsageError("--inra takes n,r,a");
    }
    return weight_ideal(source.inra[0], source.inra[1],
                        to_exponent(from_u64(source.inra[2])));
  }
  return matrix_ideal(load_matrix(source.matrix_file));
}

void add_source_options(CLI::App* cmd, SourceOptions& source) {
  cmd->add_option("--skeleton", source.skeleton, "k-skeleton ideal of the graph");
  cmd->add_flag("--parking", source.parking, "G-parking ideal of the graph");
  cmd->add_option("--lambda", source.lambda, "lambda-parking ideal, e.g. 3,2,1")
      ->delimiter(',');
  cmd->add_option("--inra", source.inra, "weight ideal I_{n,r}^<a>, as n,r,a")->delimiter(',');
  cmd->add_option("--matrix-file", source.matrix_file, "ideal J_H of a matrix H");
}

std::string render_ideal(const GlobalOptions& global, const MonomialIdeal& ideal) {
  std::ostringstream out;
  if (global.format == "json") {
    out << ideal_to_json(ideal).dump(2) << '\n';
  } else {
    write_ideal(out, ideal);
  }
  return out.str();
}

std::string render_report(const GlobalOptions& global,
                          const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  if (global.format == "json") {
    if (reports.size() == 1) {
      out << report_to_json(reports.front()).dump(2) << '\n';
    } else {
      auto all = nlohmann::json::array();
      for (const auto& r : reports) {
        all.push_back(report_to_json(r));
      }
      out << all.dump(2) << '\n';
    }
  } else if (global.format == "csv") {
    for (const auto& r : reports) {
      write_report_csv(out, r);
    }
  } else {
    for (const auto& r : reports) {
      write_report_text(out, r);
    }
  }
  return out.str();
}

struct VerifyOptions {
  std::string suite;
  std::optional<std::size_t> n;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> a_max;
  std::optional<std::uint64_t> b_max;
  std::optional<std::uint64_t> mult_max;
  std::optional<std::uint64_t> entry_max;
};

VerificationReport run_suite(const std::string& name, const VerifyOptions& o,
                             std::uint64_t seed) {
  if (name == "matrix-tree") {
    const auto corpus = default_matrix_tree_corpus(seed);
    auto report = suite_matrix_tree(corpus);
    report.seed = seed;
    return report;
  }
  if (name == "rc") {
    return suite_rc(o.n.value_or(5), o.a_max.value_or(3), o.b_max.value_or(3),
                    o.trials.value_or(100), seed);
  }
  if (name == "ineq") {
    return suite_ineq(o.n.value_or(5), o.mult_max.value_or(3), o.trials.value_or(200), seed);
  }
  if (name == "mt") {
    return suite_mt(o.n.value_or(5), o.entry_max.value_or(6), o.trials.value_or(100), seed);
  }
  if (name == "lemma1") {
    return suite_lemma1(o.n.value_or(5), o.a_max.value_or(5));
  }
  if (name == "decomp") {
    return suite_decomp(o.trials.value_or(50), seed);
  }
  if (name == "steck") {
    return suite_steck(o.n.value_or(4), static_cast<std::uint32_t>(o.a_max.value_or(4)), 5, 3);
  }
  if (name == "remark") {
    return suite_remark(o.n.value_or(5), o.a_max.value_or(5), 8);
  }
  return suite_properties(seed);
}

const std::vector<std::string> kSuites = {"matrix-tree", "rc",     "ineq",  "mt",        "lemma1",
                                          "decomp",      "steck",  "remark", "properties"};

std::string formulas_text(const GlobalOptions& global, const std::map<std::string, std::string>& values) {
  std::ostringstream out;
  if (global.format == "json") {
    out << nlohmann::json(values).dump(2) << '\n';
  } else {
    for (const auto& [k, v] : values) {
      out << k << " = " << v << '\n';
    }
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Standard monomial counts and determinants of graph and matrix ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for randomized generators and suites");
  app.add_option("--out", global.out, "write output to this file instead of stdout");
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--graph-file", global.graph_file, "graph in text or JSON form");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a multigraph");
  std::string gen_kind;
  std::size_t gen_n = 3;
  std::size_t gen_r = 0;
  std::uint64_t gen_a = 1;
  std::uint64_t gen_b = 1;
  std::uint64_t gen_mult = 3;
  gen->add_option("kind", gen_kind, "complete | gnr | random | rootdel | path")
      ->required()
      ->check(CLI::IsMember({"complete", "gnr", "random", "rootdel", "path"}));
  gen->add_option("--n", gen_n, "non-root vertices");
  gen->add_option("--r", gen_r, "deleted root edges (gnr)");
  gen->add_option("--a", gen_a, "root edge multiplicity");
  gen->add_option("--b", gen_b, "non-root edge multiplicity");
  gen->add_option("--mult", gen_mult, "maximum multiplicity (random)");

  // ideal / dim
  auto* ideal_cmd = app.add_subcommand("ideal", "print the minimal generators of an ideal");
  SourceOptions ideal_source;
  add_source_options(ideal_cmd, ideal_source);

  auto* dim_cmd = app.add_subcommand("dim", "count standard monomials of R/I");
  SourceOptions dim_source;
  bool dim_list = false;
  std::string dim_method = "recursive";
  add_source_options(dim_cmd, dim_source);
  dim_cmd->add_flag("--list", dim_list, "also list the standard monomials as exponent vectors");
  dim_cmd->add_option("--method", dim_method, "counting method")
      ->check(CLI::IsMember({"recursive", "inclusion-exclusion", "enumerate"}));

  // det
  auto* det_cmd = app.add_subcommand("det", "exact determinant");
  std::string det_matrix = "qtilde";
  std::string det_matrix_file;
  bool det_charpoly = false;
  det_cmd->add_option("--matrix", det_matrix, "graph matrix")
      ->check(CLI::IsMember({"laplacian", "signless", "ltilde", "qtilde"}));
  det_cmd->add_option("--matrix-file", det_matrix_file, "explicit integer matrix");
  det_cmd->add_flag("--charpoly", det_charpoly, "also print det(xI - M) and the PSD verdict");

  // formulas
  auto* formulas_cmd = app.add_subcommand("formulas", "evaluate closed forms");
  std::vector<std::uint64_t> f_kab;
  std::vector<std::uint64_t> f_gnr;
  std::vector<std::uint32_t> f_steck;
  std::vector<std::uint64_t> f_lemma2;
  std::vector<long> f_remark;
  formulas_cmd->add_option("--kab", f_kab, "n,a,b: dimensions for K_{n+1}^{a,b}")
      ->delimiter(',');
  formulas_cmd->add_option("--gnr", f_gnr, "n,r: det of the truncated signless Laplacian of G_{n,r}")
      ->delimiter(',');
  formulas_cmd->add_option("--steck", f_steck, "lambda: number of lambda-parking functions")
      ->delimiter(',');
  formulas_cmd->add_option("--lemma2", f_lemma2, "n,r,a: weighted sum for dim I_{n,r}^<a>")
      ->delimiter(',');
  formulas_cmd->add_option("--remark", f_remark, "n,a: both sides of the theta identity")
      ->delimiter(',');

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  VerifyOptions vopt;
  std::vector<std::string> suite_names = kSuites;
  suite_names.push_back("all");
  verify->add_option("suite", vopt.suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_names));
  verify->add_option("--n", vopt.n, "maximum number of non-root vertices / matrix order");
  verify->add_option("--trials", vopt.trials, "randomized trials");
  verify->add_option("--a-max", vopt.a_max, "maximum a (or lambda_1 for steck)");
  verify->add_option("--b-max", vopt.b_max, "maximum b");
  verify->add_option("--mult-max", vopt.mult_max, "maximum edge multiplicity");
  verify->add_option("--entry-max", vopt.entry_max, "maximum matrix entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*gen) {
    Multigraph g(1);
    if (gen_kind == "complete") {
      g = complete_multigraph(gen_n, from_u64(gen_a), from_u64(gen_b));
    } else if (gen_kind == "gnr") {
      g = g_n_r(gen_n, gen_r);
    } else if (gen_kind == "random") {
      g = random_multigraph(gen_n, gen_mult, global.seed);
    } else if (gen_kind == "rootdel") {
      g = random_root_deletion(gen_n, gen_a, gen_b, global.seed);
    } else {
      g = path_graph(gen_n);
    }
    std::ostringstream out;
    if (global.format == "json") {
      out << graph_to_json(g).dump() << '\n';
    } else {
      write_graph_text(out, g);
    }
    emit(global, out.str());
    return kExitOk;
  }

  if (*ideal_cmd) {
    emit(global, render_ideal(global, build_ideal(global, ideal_source)));
    return kExitOk;
  }

  if (*dim_cmd) {
    const MonomialIdeal ideal = build_ideal(global, dim_source);
    BigInt count;
    std::vector<Monomial> listed;
    if (dim_method == "inclusion-exclusion") {
      count = count_standard_ie(ideal);
    } else if (dim_method == "enumerate") {
      listed = enumerate_standard(ideal);
      count = static_cast<unsigned long>(listed.size());
    } else {
      count = count_standard(ideal);
    }
    if (dim_list && listed.empty() && count != 0) {
      listed = enumerate_standard(ideal);
    }
    std::ostringstream out;
    if (global.format == "json") {
      nlohmann::json j = {{"dim", to_string(count)}};
      if (dim_list) {
        auto rows = nlohmann::json::array();
        for (const auto& m : listed) {
          rows.push_back(m.exponents());
        }
        j["standard_monomials"] = rows;
      }
      out << j.dump(2) << '\n';
    } else {
      out << to_string(count) << '\n';
      if (dim_list) {
        write_exponent_vectors(out, listed);
      }
    }
    emit(global, out.str());
    return kExitOk;
  }

  if (*det_cmd) {
    IntegerMatrix m;
    if (!det_matrix_file.empty()) {
      m = load_matrix(det_matrix_file);
    } else {
      const Laplacians lap = laplacians(load_graph(global));
      if (det_matrix == "laplacian") {
        m = lap.laplacian;
      } else if (det_matrix == "signless") {
        m = lap.signless;
      } else if (det_matrix == "ltilde") {
        m = lap.truncated_laplacian;
      } else {
        m = lap.truncated_signless;
      }
    }
    const BigInt d = det(m);
    std::ostringstream out;
    if (global.format == "json") {
      nlohmann::json j = {{"det", to_string(d)}};
      if (det_charpoly) {
        auto coeffs = nlohmann::json::array();
        for (const auto& c : char_poly(m).coefficients) {
          coeffs.push_back(to_string(c));
        }
        j["charpoly"] = coeffs;
        j["psd"] = m.is_symmetric() ? nlohmann::json(is_psd(m)) : nlohmann::json(nullptr);
      }
      out << j.dump(2) << '\n';
    } else {
      out << to_string(d) << '\n';
      if (det_charpoly) {
        out << "charpoly (low to high):";
        for (const auto& c : char_poly(m).coefficients) {
          out << ' ' << to_string(c);
        }
        out << "\npsd: " << (m.is_symmetric() ? (is_psd(m) ? "yes" : "no") : "not symmetric")
            << '\n';
      }
    }
    emit(global, out.str());
    return kExitOk;
  }

  if (*formulas_cmd) {
    std::map<std::string, std::string> values;
    if (!f_kab.empty()) {
      if (f_kab.size() != 3) {
        throw UsageError("--kab takes n,a,b");
      }
      values["dim_parking_kab"] = to_string(dim_parking_kab(f_kab[0], from_u64(f_kab[1]), from_u64(f_kab[2])));
      values["dim_skel1_kab"] = to_string(dim_skel1_kab(f_kab[0], from_u64(f_kab[1]), from_u64(f_kab[2])));
    }
    if (!f_gnr.empty()) {
      if (f_gnr.size() != 2) {
        throw UsageError("--gnr takes n,r");
      }
      values["det_q_gnr"] = to_string(det_q_gnr(f_gnr[0], f_gnr[1]));
    }
    if (!f_steck.empty()) {
      values["steck_count"] = to_string(steck_count(LambdaSeq(f_steck)));
    }
    if (!f_lemma2.empty()) {
      if (f_lemma2.size() != 3) {
        throw UsageError("--lemma2 takes n,r,a");
      }
      values["lemma2_sum"] = to_string(lemma2_sum(f_lemma2[0], f_lemma2[1], from_u64(f_lemma2[2])));
    }
    if (!f_remark.empty()) {
      if (f_remark.size() != 2 || f_remark[0] < 0) {
        throw UsageError("--remark takes n,a with n >= 0");
      }
      const auto [lhs, rhs] =
          remark_identity_sides(static_cast<unsigned long>(f_remark[0]), BigInt(f_remark[1]));
      values["remark_lhs"] = to_string(lhs);
      values["remark_rhs"] = to_string(rhs);
    }
    if (values.empty()) {
      throw UsageError("formulas: give at least one of --kab, --gnr, --steck, --lemma2, --remark");
    }
    emit(global, formulas_text(global, values));
    return kExitOk;
  }

  std::vector<VerificationReport> reports;
  if (vopt.suite == "all") {
    for (const auto& name : kSuites) {
      reports.push_back(run_suite(name, vopt, global.seed));
    }
  } else {
    reports.push_back(run_suite(vopt.suite, vopt, global.seed));
  }
  emit(global, render_report(global, reports));
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.all_passed();
    if (!r.all_passed()) {
      std::cerr << "suite " << r.suite << ": " << r.failed() << " of " << r.total()
                << " trials failed\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "skeldet: " << e.what() << '\n';
    return kExitUsage;
  }
}
