#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclecert/bounds.hpp"
#include "cyclecert/colouring.hpp"
#include "cyclecert/descent.hpp"
#include "cyclecert/oracle.hpp"

namespace {

using namespace cyclecert;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open `" + path + "` for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open `" + path + "` for writing");
  out << content;
  if (!out) throw InputError("failed writing `" + path + "`");
}

DescentLimits limits_from_env() {
  DescentLimits limits;
  if (const char* env = std::getenv("CYCLECERT_SEARCH_BUDGET")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw InputError("CYCLECERT_SEARCH_BUDGET must be a positive integer");
    limits.search_budget = value;
  }
  return limits;
}

OracleBudget oracle_budget_from_env() {
  OracleBudget budget;
  budget.max_nodes = limits_from_env().search_budget;
  return budget;
}

std::string cycle_summary(const OddCycleCertificate& cert) {
  std::ostringstream out;
  out << "odd cycle of length " << cert.length() << " in colour "
      << cert.colour << ":";
  for (Vertex v : cert.cycle) out << " " << v;
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Certified size bounds and short monochromatic odd cycles for local "
      "edge colourings of complete graphs. The commands generate colourings, "
      "evaluate the closed-form bounds, run the weight-descent procedure, "
      "extract odd-cycle certificates and cross-check everything with "
      "exhaustive oracles. Exact Ramsey-type numbers themselves are beyond "
      "any command here; what is certified are bounds and explicit witnesses."};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate colourings in kcol format");
  gen->require_subcommand(1);

  auto* gen_doubling = gen->add_subcommand(
      "doubling", "Block construction with no short odd monochromatic cycle");
  int gd_l = 0, gd_k = 0;
  std::string gd_out;
  gen_doubling->add_option("--l", gd_l, "half length parameter")->required();
  gen_doubling->add_option("--k", gd_k, "number of colours")->required();
  gen_doubling->add_option("--out", gd_out, "output file")->required();
  gen_doubling->callback([&] {
    EdgeColouring ec = EdgeColouring::doubling(gd_l, gd_k);
    write_file(gd_out, ec.save());
    std::cout << "wrote " << gd_out << ": n=" << ec.size() << " k=" << gd_k
              << "\n";
  });

  auto* gen_random = gen->add_subcommand("random", "Uniform random colouring");
  int gr_n = 0, gr_k = 0;
  std::uint64_t gr_seed = 0;
  std::string gr_out;
  gen_random->add_option("--n", gr_n, "number of vertices")->required();
  gen_random->add_option("--k", gr_k, "number of colours")->required();
  gen_random->add_option("--seed", gr_seed, "rng seed")->required();
  gen_random->add_option("--out", gr_out, "output file")->required();
  gen_random->callback([&] {
    EdgeColouring ec = EdgeColouring::random(gr_n, gr_k, gr_seed);
    write_file(gr_out, ec.save());
    std::cout << "wrote " << gr_out << ": n=" << ec.size() << " k=" << gr_k
              << " seed=" << gr_seed << "\n";
  });

  // bounds
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Evaluate the certified closed-form bounds");
  int bo_k = 0, bo_l = 0;
  std::string bo_b, bo_chi;
  bounds_cmd->add_option("--k", bo_k, "number of colours")->required();
  bounds_cmd->add_option("--l", bo_l, "odd cycle half length")->required();
  bounds_cmd->add_option("--b", bo_b, "growth base (rational, > 2)");
  bounds_cmd->add_option("--chi", bo_chi, "chromatic parameter");
  bounds_cmd->callback([&] {
    std::optional<mpq_class> b;
    if (!bo_b.empty()) b = parse_rational(bo_b);
    std::optional<int> chi;
    if (!bo_chi.empty()) {
      try {
        std::size_t used = 0;
        chi = std::stoi(bo_chi, &used);
        if (used != bo_chi.size()) throw std::invalid_argument(bo_chi);
      } catch (const std::exception&) {
        throw InputError("bad --chi `" + bo_chi + "`");
      }
    }
    BoundReport report = compute_bounds(bo_k, bo_l, b, chi);
    std::cout << report_pretty(report) << "\n" << report_keyvalues(report);
  });

  // descend
  auto* descend_cmd = app.add_subcommand(
      "descend", "Run the weight-descent deletion procedure over a colouring");
  std::string de_in, de_mode = "generic", de_trace;
  int de_l = 0, de_chi = 0;
  descend_cmd->add_option("--in", de_in, "kcol input file")->required();
  descend_cmd->add_option("--l", de_l, "odd cycle half length")->required();
  descend_cmd->add_option("--mode", de_mode, "generic, t1 or t2")
      ->check(CLI::IsMember({"generic", "t1", "t2"}));
  descend_cmd->add_option("--chi", de_chi,
                          "chromatic cap for generic mode (forced otherwise)");
  descend_cmd->add_option("--trace", de_trace, "trace output file");
  descend_cmd->callback([&] {
    DescentMode mode = mode_from_name(de_mode);
    if (mode == DescentMode::Generic && de_chi < 1)
      throw InputError("generic mode needs --chi >= 1");
    EdgeColouring ec = EdgeColouring::load(read_file(de_in));
    DescentTrace trace = descend(ec, de_l, de_chi, mode, limits_from_env());
    if (!de_trace.empty()) write_file(de_trace, save_trace(trace));
    if (trace.completed) {
      std::cout << "completed: " << trace.steps.size() << " steps certify n="
                << trace.n << " <= chi^k * k^(k/l) with k=" << trace.k
                << " l=" << trace.ell << " chi=" << trace.chi << "\n";
    } else {
      const Violation& v = *trace.violation;
      if (v.kind == Violation::Kind::WithinLayerEdge) {
        std::cout << "violation: within-layer edge {" << v.x << "," << v.y
                  << "} at layer " << v.layer << " around vertex " << v.v
                  << " in colour " << v.c << "\n";
      } else {
        std::cout << "violation: chromatic threshold " << v.threshold
                  << " exceeded at "
                  << (v.layer == -1 ? std::string("the ball")
                                    : "layer " + std::to_string(v.layer))
                  << " around vertex " << v.v << " in colour " << v.c << "\n";
      }
      exit_code = 1;
    }
  });

  // extract
  auto* extract_cmd = app.add_subcommand(
      "extract", "Extract a short monochromatic odd cycle certificate");
  std::string ex_in, ex_b, ex_cert;
  int ex_l = 0;
  extract_cmd->add_option("--in", ex_in, "kcol input file")->required();
  auto* ex_b_opt =
      extract_cmd->add_option("--b", ex_b, "growth base (rational, > 2)");
  auto* ex_l_opt =
      extract_cmd->add_option("--l", ex_l, "odd cycle half length");
  ex_b_opt->excludes(ex_l_opt);
  extract_cmd->add_option("--cert", ex_cert, "certificate output file")
      ->required();
  extract_cmd->callback([&] {
    EdgeColouring ec = EdgeColouring::load(read_file(ex_in));
    ExtractionResult result = [&] {
      if (ex_b_opt->count() > 0)
        return extract_theorem2(ec, parse_rational(ex_b), limits_from_env());
      if (ex_l_opt->count() > 0)
        return extract_theorem1(ec, ex_l, limits_from_env());
      throw InputError("extract needs --b (theorem 2) or --l (theorem 1)");
    }();
    write_file(ex_cert, save_certificate(result.certificate));
    std::cout << cycle_summary(result.certificate) << "\n";
    if (result.degenerate)
      std::cout << "note: single-colour input, depth clamped to l=1\n";
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Re-check certificates and traces");
  verify_cmd->require_subcommand(1);

  auto* verify_cert = verify_cmd->add_subcommand(
      "cert", "Validate an odd cycle certificate against a colouring");
  std::string vc_in, vc_cert;
  verify_cert->add_option("--in", vc_in, "kcol input file")->required();
  verify_cert->add_option("--cert", vc_cert, "certificate file")->required();
  verify_cert->callback([&] {
    EdgeColouring ec = EdgeColouring::load(read_file(vc_in));
    OddCycleCertificate cert = load_certificate(read_file(vc_cert));
    VerifyResult result = verify_certificate(ec, cert);
    if (result.accepted) {
      std::cout << "accepted: " << cycle_summary(cert) << "\n";
    } else {
      std::cout << "rejected: " << result.reason << "\n";
      exit_code = 1;
    }
  });

  auto* verify_trace_cmd = verify_cmd->add_subcommand(
      "trace", "Re-validate every proof obligation in a descent trace");
  std::string vt_in, vt_trace;
  verify_trace_cmd->add_option("--in", vt_in, "kcol input file")->required();
  verify_trace_cmd->add_option("--trace", vt_trace, "trace file")->required();
  verify_trace_cmd->callback([&] {
    EdgeColouring ec = EdgeColouring::load(read_file(vt_in));
    DescentTrace trace = load_trace(read_file(vt_trace));
    VerifyResult result = verify_trace(trace, ec, limits_from_env());
    if (result.accepted) {
      std::cout << "accepted: " << trace.steps.size() << " steps, "
                << (trace.completed ? "completed" : "violation") << "\n";
    } else {
      std::cout << "rejected: " << result.reason << "\n";
      exit_code = 1;
    }
  });

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Exhaustive cross-checks (small inputs)");
  oracle_cmd->require_subcommand(1);

  auto* oracle_odd = oracle_cmd->add_subcommand(
      "odd-cycle", "Shortest monochromatic odd cycle by exhaustive search");
  std::string oo_in;
  int oo_max = 0;
  oracle_odd->add_option("--in", oo_in, "kcol input file")->required();
  oracle_odd->add_option("--max-len", oo_max, "largest length to report")
      ->required();
  oracle_odd->callback([&] {
    EdgeColouring ec = EdgeColouring::load(read_file(oo_in));
    auto found = find_mono_odd_cycle(ec, oo_max, oracle_budget_from_env());
    if (found)
      std::cout << cycle_summary(*found) << "\n";
    else
      std::cout << "no monochromatic odd cycle of length <= " << oo_max
                << "\n";
  });

  auto* oracle_efrs = oracle_cmd->add_subcommand(
      "efrs", "Neighbourhood chromatic bound for short-odd-cycle-free graphs");
  std::string oe_graph;
  int oe_l = 0;
  oracle_efrs->add_option("--graph", oe_graph, "edge list input file")
      ->required();
  oracle_efrs->add_option("--l", oe_l, "odd cycle half length")->required();
  oracle_efrs->callback([&] {
    SimpleGraph g = load_graph(read_file(oe_graph));
    EfrsReport report = efrs_check(g, oe_l, oracle_budget_from_env());
    switch (report.verdict) {
      case EfrsReport::Verdict::Accept:
        std::cout << "accepted: every distance layer up to " << oe_l
                  << " is " << (2 * oe_l - 1) << "-colourable\n";
        break;
      case EfrsReport::Verdict::PreconditionFailed: {
        std::cout << "precondition failed: cycle of length " << (2 * oe_l + 1)
                  << ":";
        for (int v : report.found_cycle) std::cout << " " << v;
        std::cout << "\n";
        exit_code = 2;
        break;
      }
      case EfrsReport::Verdict::Counterexample:
        std::cout << "counterexample: layer " << report.layer << " around "
                  << report.v << " needs more than " << (2 * oe_l - 1)
                  << " colours\n";
        exit_code = 1;
        break;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SolverLimitError& e) {
    std::cerr << "solver limit exceeded: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
