#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subspectra/error.hpp"
#include "subspectra/json_io.hpp"
#include "subspectra/products.hpp"
#include "subspectra/roots.hpp"

namespace ss = subspectra;

namespace {

struct Input {
  std::string path;
  std::string matrix = "A";
  bool graph = false;
  bool json = false;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ss::Error(ss::ErrorCode::InvalidParams, "cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ss::Error(ss::ErrorCode::InvalidParams, "cannot write " + path);
  return out;
}

// "-" means stdout.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
  } else {
    open_out(path) << text;
  }
}

ss::MatrixKind parse_matrix(const std::string& name) {
  if (name == "A") return ss::MatrixKind::Adjacency;
  if (name == "L") return ss::MatrixKind::Laplacian;
  if (name == "Q") return ss::MatrixKind::SignlessLaplacian;
  throw ss::Error(ss::ErrorCode::UnsupportedMatrixKind, "matrix must be A, L or Q");
}

ss::IntMatrix load_matrix(const Input& in) {
  auto file = open_in(in.path);
  const auto kind = parse_matrix(in.matrix);
  if (in.graph) return ss::matrix_of(ss::read_graph(file), kind);
  return ss::matrix_of(ss::read_digraph(file), kind);
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--input", in.path, "digraph file ('n m' then m lines 'tail head')")->required();
  cmd->add_option("--matrix", in.matrix, "A, L or Q")->check(CLI::IsMember({"A", "L", "Q"}));
  cmd->add_flag("--graph", in.graph, "read an undirected graph (A and Q only)");
}

std::string format_root(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g %+.15gi", z.real(), z.imag());
  return buf;
}

void print_summary(const ss::VerificationReport& r) {
  std::cout << r.theorem << ": " << r.trials << " trials, " << r.failures.size() << " failures, " << r.skipped
            << " skipped, " << r.elapsed_ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of subdivision joins and coronas of digraphs"};
  app.require_subcommand(1);

  Input in;
  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
  add_input(charpoly_cmd, in);
  charpoly_cmd->add_flag("--json", in.json, "print {\"coeffs\": [...]}");

  auto* coronal_cmd = app.add_subcommand("coronal", "exact coronal 1ᵀ(λI − M)⁻¹1");
  add_input(coronal_cmd, in);
  coronal_cmd->add_flag("--json", in.json, "print {\"num\": ..., \"den\": ...}");

  auto* matrix_cmd = app.add_subcommand("matrix", "dump the matrix as JSON");
  add_input(matrix_cmd, in);

  double tol = 1e-12;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "numeric eigenvalues from the exact charpoly");
  add_input(spectrum_cmd, in);
  spectrum_cmd->add_option("--tol", tol, "backward-error tolerance")->check(CLI::PositiveNumber);

  std::string conn_path;
  auto* conn_cmd = app.add_subcommand("connectivity", "strong-connectivity verdict");
  conn_cmd->add_option("--input", conn_path, "digraph file")->required();

  std::string kind_name, d1_path, d2_path, out_path;
  bool product_graph = false;
  auto* product_cmd = app.add_subcommand("product", "build a subdivision join or corona");
  product_cmd->add_option("--kind", kind_name, "svj, saj, svc or sac")
      ->required()
      ->check(CLI::IsMember({"svj", "saj", "svc", "sac"}));
  product_cmd->add_option("--d1", d1_path, "first factor (its arcs are subdivided)")->required();
  product_cmd->add_option("--d2", d2_path, "second factor")->required();
  product_cmd->add_flag("--graph", product_graph, "factors are undirected graphs");
  product_cmd->add_option("--out", out_path, "output file, - for stdout")->required();

  std::string theorem, report_path;
  bool all = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t replay = 0;
  ss::Bounds bounds;
  auto* verify_cmd = app.add_subcommand("verify", "randomized formula-vs-construction sweep");
  auto* theorem_opt = verify_cmd->add_option("--theorem", theorem, "theorem id");
  auto* all_opt = verify_cmd->add_flag("--all", all, "run every theorem id");
  theorem_opt->excludes(all_opt);
  verify_cmd->add_option("--trials", trials, "trials per theorem");
  verify_cmd->add_option("--seed", seed, "master seed");
  verify_cmd->add_option("--max-n1", bounds.max_n1, "largest first factor")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--max-n2", bounds.max_n2, "largest second factor")->check(CLI::Range(1, 12));
  verify_cmd->add_option("--report", report_path, "write the JSON report here ('-' for stdout)");
  auto* replay_opt = verify_cmd->add_option("--replay", replay, "rerun one trial from its reported seed");
  replay_opt->needs(theorem_opt);

  auto* list_cmd = app.add_subcommand("theorems", "list theorem ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*charpoly_cmd) {
      const auto f = ss::charpoly(load_matrix(in));
      std::cout << (in.json ? ss::to_json(f).dump() : f.to_string()) << '\n';
    } else if (*coronal_cmd) {
      const auto chi = ss::coronal(load_matrix(in));
      std::cout << (in.json ? ss::to_json(chi).dump() : chi.to_string()) << '\n';
    } else if (*matrix_cmd) {
      std::cout << ss::to_json(load_matrix(in)).dump() << '\n';
    } else if (*spectrum_cmd) {
      for (const auto& z : ss::poly_roots(ss::charpoly(load_matrix(in)), tol)) std::cout << format_root(z) << '\n';
    } else if (*conn_cmd) {
      auto file = open_in(conn_path);
      std::cout << (ss::is_strongly_connected(ss::read_digraph(file)) ? "strongly connected" : "not strongly connected")
                << '\n';
    } else if (*product_cmd) {
      const auto kind = ss::parse_product_kind(kind_name);
      auto f1 = open_in(d1_path);
      auto f2 = open_in(d2_path);
      std::ostringstream out;
      if (product_graph) {
        const auto g1 = ss::read_graph(f1);
        ss::write_graph(out, ss::build_product(kind, g1, ss::read_graph(f2)));
      } else {
        const auto d1 = ss::read_digraph(f1);
        ss::write_digraph(out, ss::build_product(kind, d1, ss::read_digraph(f2)));
      }
      emit(out_path, out.str());
    } else if (*list_cmd) {
      for (const auto& id : ss::theorem_ids()) std::cout << id << '\n';
    } else if (*verify_cmd) {
      if (!all && theorem.empty()) throw ss::Error(ss::ErrorCode::InvalidParams, "give --theorem ID or --all");
      if (*replay_opt) {
        const auto outcome = ss::run_trial(theorem, replay, bounds);
        if (!outcome.failure) {
          std::cout << theorem << ": trial seed " << replay << " passes\n";
          return 0;
        }
        ss::VerificationReport r;
        r.theorem = theorem;
        r.trials = 1;
        r.seed = replay;
        r.failures.push_back(*outcome.failure);
        std::cout << ss::to_json(r).dump(2) << '\n';
        return 1;
      }
      const std::vector<std::string> ids = all ? ss::theorem_ids() : std::vector<std::string>{theorem};
      ss::Json reports = ss::Json::array();
      bool passed = true;
      for (const auto& id : ids) {
        const auto r = ss::verify(id, trials, seed, bounds);
        print_summary(r);
        passed = passed && r.passed();
        reports.push_back(ss::to_json(r));
      }
      if (!report_path.empty()) {
        const ss::Json doc = all ? ss::Json{{"reports", reports}} : reports.front();
        emit(report_path, doc.dump(2) + '\n');
      }
      return passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
