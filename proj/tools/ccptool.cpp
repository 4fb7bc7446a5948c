// Command-line front end over the .ccp/.cmx/.vc formats: instance
// generators, the exact consistency oracle, verification, cover
// extraction, 1-color reconstruction and a PPM renderer.
//
// Exit codes: 0 = yes/success, 1 = no/refuted, 2 = usage or I/O error,
// 3 = budget exceeded. The first stdout line is always RESULT: <verdict>.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccp/bitvec.hpp"
#include "ccp/binmat.hpp"
#include "ccp/gadgets.hpp"
#include "ccp/instance.hpp"
#include "ccp/io.hpp"
#include "ccp/reduction.hpp"
#include "ccp/render.hpp"
#include "ccp/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ccp::ArgumentError("empty entry in list");
    values.push_back(std::stoi(item));
  }
  return values;
}

ccp::Edge parse_edge_arg(const std::string& text) {
  auto parts = parse_int_list(text);
  if (parts.size() != 2)
    throw ccp::ArgumentError("--edge expects 'u,v'");
  return ccp::Edge(parts[0], parts[1]);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

struct CheckOptions {
  std::string instance_path;
  std::uint64_t budget_nodes = 10'000'000;
  int l_cap = 15;
  bool force = false;
  std::string witness_path;
};

int run_check(const CheckOptions& opt) {
  ccp::CcpInstance I = ccp::parse_instance(ccp::read_file(opt.instance_path));
  if (static_cast<int>(I.size()) > opt.l_cap && !opt.force) {
    std::cerr << "error: instance size " << I.size() << " exceeds the cap of "
              << opt.l_cap
              << " for the exact solver; pass --force to try anyway\n";
    return kExitUsage;
  }
  ccp::SearchBudget budget;
  budget.max_nodes = opt.budget_nodes;
  ccp::SolveVerdict verdict = ccp::is_consistent_exact(I, budget);
  switch (verdict.status) {
    case ccp::SolveStatus::Consistent:
      std::cout << "RESULT: CONSISTENT\n";
      std::cout << "nodes: " << verdict.nodes_explored << "\n";
      if (!opt.witness_path.empty())
        ccp::write_file(opt.witness_path,
                        ccp::serialize_matrix(*verdict.witness));
      return kExitYes;
    case ccp::SolveStatus::Inconsistent:
      std::cout << "RESULT: INCONSISTENT\n";
      std::cout << "nodes: " << verdict.nodes_explored << "\n";
      return kExitNo;
    case ccp::SolveStatus::BudgetExceeded:
    default:
      std::cout << "RESULT: UNKNOWN\n";
      std::cout << "nodes: " << verdict.nodes_explored << "\n";
      return kExitBudget;
  }
}

int run_verify(const std::string& instance_path, const std::string& matrix_path) {
  ccp::CcpInstance I = ccp::parse_instance(ccp::read_file(instance_path));
  ccp::ColorMatrix T = ccp::parse_matrix(ccp::read_file(matrix_path));
  bool ok;
  try {
    ok = ccp::verify_realization(I, T);
  } catch (const ccp::ArgumentError& e) {
    std::cout << "RESULT: REJECTED\n";
    std::cout << "reason: " << e.what() << "\n";
    return kExitNo;
  }
  if (ok) {
    std::cout << "RESULT: VERIFIED\n";
    return kExitYes;
  }
  std::cout << "RESULT: REJECTED\n";
  std::cout << "reason: row or column counts do not match the sums\n";
  return kExitNo;
}

int run_reconstruct01(const std::string& instance_path,
                      const std::string& out_path) {
  ccp::CcpInstance I = ccp::parse_instance(ccp::read_file(instance_path));
  if (I.palette().count() != 1) {
    std::cerr << "error: reconstruct01 expects a 1-color instance, got "
              << I.palette().count() << " colors\n";
    return kExitUsage;
  }
  ccp::SumVector x(I.row_sums(0));
  ccp::SumVector y(I.col_sums(0));
  ccp::Matrix01 M;
  try {
    M = ccp::reconstruct01(x, y);
  } catch (const ccp::InconsistentError& e) {
    std::cout << "RESULT: INCONSISTENT\n";
    std::cout << "reason: " << e.what() << "\n";
    return kExitNo;
  }
  ccp::ColorMatrix T(I.size(), I.palette());
  for (std::size_t i = 0; i < I.size(); ++i)
    for (std::size_t j = 0; j < I.size(); ++j)
      if (M.at(i, j)) T.set_color(i, j, 0);
  std::cout << "RESULT: CONSISTENT\n";
  if (!out_path.empty())
    ccp::write_file(out_path, ccp::serialize_matrix(T));
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-tomography toolkit for c-color consistency instances"};
  app.require_subcommand(1);

  // reduce
  auto* reduce_cmd =
      app.add_subcommand("reduce", "map a vertex-cover instance to a 3-color "
                                   "consistency instance");
  std::string graph_path, out_path;
  int k_value = 0;
  reduce_cmd->add_option("--graph", graph_path, ".vc graph file")->required();
  reduce_cmd->add_option("--k", k_value, "cover size K")->required();
  reduce_cmd->add_option("-o,--output", out_path, "output .ccp path")
      ->required();

  // check
  auto* check_cmd = app.add_subcommand(
      "check", "decide consistency exactly (small instances only)");
  CheckOptions check_opt;
  check_cmd->add_option("instance", check_opt.instance_path, ".ccp file")
      ->required();
  check_cmd->add_option("--budget-nodes", check_opt.budget_nodes,
                        "search-node budget");
  check_cmd->add_option("--l-cap", check_opt.l_cap,
                        "largest instance size accepted without --force");
  check_cmd->add_flag("--force", check_opt.force,
                      "run even above the size cap");
  check_cmd->add_option("-o,--output", check_opt.witness_path,
                        "write a witness realization here if consistent");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "check a realization against an instance");
  std::string verify_instance, verify_matrix;
  verify_cmd->add_option("instance", verify_instance, ".ccp file")->required();
  verify_cmd->add_option("matrix", verify_matrix, ".cmx file")->required();

  // build-realization
  auto* build_cmd = app.add_subcommand(
      "build-realization",
      "assemble a realization of the reduction from a vertex cover");
  std::string build_graph, build_out, cover_list;
  int build_k = 0;
  build_cmd->add_option("--graph", build_graph, ".vc graph file")->required();
  build_cmd->add_option("--k", build_k, "cover size K")->required();
  build_cmd->add_option("--cover", cover_list, "comma list of vertices")
      ->required();
  build_cmd->add_option("-o,--output", build_out, "output .cmx path")
      ->required();

  // extract-cover
  auto* extract_cmd = app.add_subcommand(
      "extract-cover", "read a vertex cover out of a reduction realization");
  std::string extract_graph, extract_matrix;
  int extract_k = 0;
  extract_cmd->add_option("--graph", extract_graph, ".vc graph file")
      ->required();
  extract_cmd->add_option("--k", extract_k, "cover size K")->required();
  extract_cmd->add_option("matrix", extract_matrix, ".cmx file")->required();

  // reconstruct01
  auto* rec_cmd = app.add_subcommand(
      "reconstruct01", "reconstruct a 0-1 matrix from a 1-color instance");
  std::string rec_instance, rec_out;
  rec_cmd->add_option("instance", rec_instance, "1-color .ccp file")
      ->required();
  rec_cmd->add_option("-o,--output", rec_out, "output .cmx path");

  // gadget {bsm|asm|ev}
  auto* gadget_cmd =
      app.add_subcommand("gadget", "emit one of the (n+2)x(n+2) gadget "
                                   "instances");
  gadget_cmd->require_subcommand(1);
  std::string alpha_str, beta_str, gamma_str, delta_str, edge_str, gadget_out;
  int gadget_k = 0;
  auto* bsm_cmd = gadget_cmd->add_subcommand("bsm", "beige skew mirror");
  bsm_cmd->add_option("--alpha", alpha_str, "0-1 string")->required();
  bsm_cmd->add_option("--beta", beta_str, "0-1 string")->required();
  bsm_cmd->add_option("-o,--output", gadget_out, "output .ccp path")
      ->required();
  auto* asm_cmd = gadget_cmd->add_subcommand("asm", "azure mirror");
  asm_cmd->add_option("--gamma", gamma_str, "0-1 string")->required();
  asm_cmd->add_option("--delta", delta_str, "0-1 string")->required();
  asm_cmd->add_option("--k", gadget_k, "cover size K")->required();
  asm_cmd->add_option("-o,--output", gadget_out, "output .ccp path")
      ->required();
  auto* ev_cmd = gadget_cmd->add_subcommand("ev", "edge verifier");
  ev_cmd->add_option("--gamma", gamma_str, "0-1 string")->required();
  ev_cmd->add_option("--delta", delta_str,
                     "0-1 string (defaults to reverse of gamma)");
  ev_cmd->add_option("--edge", edge_str, "edge 'u,v'")->required();
  ev_cmd->add_option("--k", gadget_k, "cover size K")->required();
  ev_cmd->add_option("-o,--output", gadget_out, "output .ccp path")
      ->required();

  // render
  auto* render_cmd =
      app.add_subcommand("render", "render a realization as a P3 pixmap");
  std::string render_matrix, render_out;
  int render_scale = 1;
  render_cmd->add_option("matrix", render_matrix, ".cmx file")->required();
  render_cmd->add_option("-o,--output", render_out, "output .ppm path")
      ->required();
  render_cmd->add_option("--scale", render_scale, "integer upscaling factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*reduce_cmd) {
      ccp::Graph G = ccp::parse_graph(ccp::read_file(graph_path));
      ccp::CcpInstance I = ccp::reduce(G, k_value);
      ccp::write_file(out_path, ccp::serialize_instance(I));
      std::cout << "RESULT: OK\n";
      std::cout << "size: " << I.size() << "\n";
      return kExitYes;
    }
    if (*check_cmd) return run_check(check_opt);
    if (*verify_cmd) return run_verify(verify_instance, verify_matrix);
    if (*build_cmd) {
      ccp::Graph G = ccp::parse_graph(ccp::read_file(build_graph));
      ccp::ColorMatrix T;
      try {
        T = ccp::build_cover_realization(G, build_k,
                                         parse_int_list(cover_list));
      } catch (const ccp::ArgumentError& e) {
        std::cout << "RESULT: REJECTED\n";
        std::cout << "reason: " << e.what() << "\n";
        return kExitNo;
      }
      ccp::write_file(build_out, ccp::serialize_matrix(T));
      std::cout << "RESULT: OK\n";
      return kExitYes;
    }
    if (*extract_cmd) {
      ccp::Graph G = ccp::parse_graph(ccp::read_file(extract_graph));
      ccp::ColorMatrix T = ccp::parse_matrix(ccp::read_file(extract_matrix));
      std::vector<int> cover;
      try {
        cover = ccp::extract_cover(G, extract_k, T);
      } catch (const ccp::ArgumentError& e) {
        std::cout << "RESULT: REJECTED\n";
        std::cout << "reason: " << e.what() << "\n";
        return kExitNo;
      }
      std::cout << "RESULT: OK\n";
      std::cout << "cover: " << join_ints(cover) << "\n";
      return kExitYes;
    }
    if (*rec_cmd) return run_reconstruct01(rec_instance, rec_out);
    if (*gadget_cmd) {
      ccp::CcpInstance I;
      if (*bsm_cmd) {
        I = ccp::make_bsm(ccp::BitVec::parse(alpha_str),
                          ccp::BitVec::parse(beta_str));
      } else if (*asm_cmd) {
        I = ccp::make_asm(ccp::BitVec::parse(gamma_str),
                          ccp::BitVec::parse(delta_str), gadget_k);
      } else {
        ccp::BitVec gamma = ccp::BitVec::parse(gamma_str);
        ccp::BitVec delta =
            delta_str.empty() ? ccp::reverse(gamma) : ccp::BitVec::parse(delta_str);
        I = ccp::make_ev(gamma, delta, parse_edge_arg(edge_str), gadget_k);
      }
      ccp::write_file(gadget_out, ccp::serialize_instance(I));
      std::cout << "RESULT: OK\n";
      return kExitYes;
    }
    if (*render_cmd) {
      ccp::ColorMatrix T = ccp::parse_matrix(ccp::read_file(render_matrix));
      ccp::write_file(render_out, ccp::render_ppm(T, render_scale));
      std::cout << "RESULT: OK\n";
      return kExitYes;
    }
  } catch (const ccp::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ccp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
