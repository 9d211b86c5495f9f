// eulerhg: decide and construct Euler tours and families of hypergraphs.
//
// Exit status: 0 yes/ok, 1 no/violation, 2 usage or format error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eulerhg/bench.hpp"
#include "eulerhg/edge_cuts.hpp"
#include "eulerhg/error.hpp"
#include "eulerhg/generators.hpp"
#include "eulerhg/hgr_io.hpp"
#include "eulerhg/solvers.hpp"

namespace {

using namespace eulerhg;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct SolveArgs {
  std::string file;
  std::string strategy = "standard";
  std::string cut;
  bool parallel = false;
  std::uint64_t seed = 0;
  bool json = false;
  bool verify_spanning = false;
};

void add_solve_options(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("FILE", a.file, "input .hgr file")->required();
  cmd->add_option("--strategy", a.strategy, "standard | collapse | oracle")
      ->check(CLI::IsMember({"standard", "collapse", "oracle"}));
  cmd->add_option("--cut", a.cut, "minimal | minimum (default depends on strategy)")
      ->check(CLI::IsMember({"minimal", "minimum"}));
  cmd->add_flag("--parallel", a.parallel, "branch-parallel search at the top level");
  cmd->add_option("--seed", a.seed, "recorded with the run; the search is deterministic");
  cmd->add_flag("--json", a.json, "print one JSON object");
  cmd->add_flag("--verify-spanning", a.verify_spanning, "report whether the certificate is spanning");
}

int run_solve(const SolveArgs& a, Mode mode, bool construct) {
  const Hypergraph h = read_hgr_file(a.file);
  SolverConfig cfg;
  cfg.strategy = parse_strategy(a.strategy);
  if (!a.cut.empty()) cfg.cut = parse_cut_choice(a.cut);
  cfg.parallel = a.parallel;
  cfg.seed = a.seed;
  const SolveOutcome r = solve(h, mode, cfg);

  if (a.json) {
    nlohmann::json out = {{"mode", to_string(mode)},
                          {"strategy", to_string(cfg.strategy)},
                          {"seed", cfg.seed},
                          {"decision", r.decision}};
    if (construct && r.decision) out["certificate"] = family_to_json(*r.certificate);
    if (a.verify_spanning && r.decision) out["spanning"] = is_spanning(h, *r.certificate);
    out["stats"] = stats_to_json(r.stats);
    std::cout << out.dump(2) << '\n';
  } else {
    if (construct && r.decision) {
      std::cout << emit_certificate(r);
    } else {
      std::cout << (r.decision ? "yes" : "no") << '\n';
    }
    if (a.verify_spanning && r.decision) {
      std::cout << "SPANNING " << (is_spanning(h, *r.certificate) ? "yes" : "no") << '\n';
    }
    std::cerr << "stats: " << stats_line(r.stats) << '\n';
  }
  return r.decision ? kYes : kNo;
}

std::string one_based(const VertexSet& s) {
  std::string out;
  for (VertexId v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

int run_min_cut(const std::string& file, bool json) {
  const Hypergraph h = read_hgr_file(file);
  const EdgeCut cut = minimum_edge_cut(h);
  if (json) {
    nlohmann::json side = nlohmann::json::array();
    for (VertexId v : cut.side) side.push_back(v + 1);
    std::cout << nlohmann::json{{"lambda", cut.size()}, {"side", side}, {"edges", cut.edges}}.dump(2) << '\n';
    return kYes;
  }
  std::cout << "lambda=" << cut.size() << '\n' << "S: " << one_based(cut.side) << '\n' << "F:";
  for (EdgeId e : cut.edges) std::cout << " e" << e;
  std::cout << '\n';
  return kYes;
}

int run_peel(const std::string& file) {
  const Hypergraph h = read_hgr_file(file);
  const PeelResult r = peel_degree_le1(h);
  const char* verdict = r.verdict == PeelVerdict::Proceed           ? "proceed"
                        : r.verdict == PeelVerdict::NoEulerFamily   ? "no-euler-family"
                                                                    : "trivial-eulerian";
  std::cout << "verdict: " << verdict << '\n';
  std::cout << "removed: " << one_based(make_vertex_set(r.removed)) << '\n';
  std::cout << "vertices: " << one_based(r.reduced.vertices()) << '\n';
  for (std::size_t i = 0; i < r.reduced.num_edges(); ++i) {
    std::cout << 'e' << i << ": " << one_based(r.reduced.edges()[i]) << '\n';
  }
  return r.verdict == PeelVerdict::NoEulerFamily ? kNo : kYes;
}

struct GenArgs {
  std::size_t n = 4;
  std::size_t m = 4;
  std::string sizes = "2-4";
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t count = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  GenSpec spec;
  spec.max_vertices = a.n;
  spec.max_edges = a.m;
  spec.seed = a.seed;
  spec.count = a.count;
  spec.model = a.exhaustive ? GenModel::ExhaustiveSmall : GenModel::Uniform;
  const auto dash = a.sizes.find('-');
  try {
    spec.min_edge_size = std::stoul(a.sizes.substr(0, dash));
    spec.max_edge_size = dash == std::string::npos ? spec.min_edge_size : std::stoul(a.sizes.substr(dash + 1));
  } catch (const std::exception&) {
    throw Error(Errc::BadSpec, "--sizes expects A or A-B");
  }
  const auto all = generate(spec);
  if (!a.out.empty()) std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::ostringstream name;
    name << "gen_" << std::setw(5) << std::setfill('0') << i << ".hgr";
    if (a.out.empty()) {
      std::cout << "% " << name.str() << '\n' << emit_hgr(all[i]);
    } else {
      std::ofstream(std::filesystem::path(a.out) / name.str()) << emit_hgr(all[i]);
    }
  }
  if (!a.out.empty()) std::cerr << "wrote " << all.size() << " files to " << a.out << '\n';
  return kYes;
}

int run_bench_cmd(const std::string& corpus, const std::vector<std::string>& names, const std::string& mode) {
  std::vector<Strategy> strategies;
  for (const auto& n : names) strategies.push_back(parse_strategy(n));
  const Corpus instances = load_corpus(corpus);
  std::vector<Mode> modes;
  if (mode == "family" || mode == "both") modes.push_back(Mode::Family);
  if (mode == "tour" || mode == "both") modes.push_back(Mode::Tour);
  BenchReport all;
  for (Mode m : modes) {
    BenchReport r = run_bench(instances, strategies, m);
    all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
  }
  std::cout << all.table() << all.summary();
  return kYes;
}

int run_verify(const std::string& file, const std::string& cert_file, bool tour, bool spanning) {
  const Hypergraph h = read_hgr_file(file);
  std::ifstream in(cert_file, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot open " + cert_file);
  std::stringstream buf;
  buf << in.rdbuf();
  EulerFamily fam;
  try {
    fam = parse_certificate(buf.str());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() != Errc::CertificateInvalid) throw;
    std::cout << "INVALID " << e.what() << '\n';
    return kNo;
  }
  if (auto r = verify_euler_family(h, fam, spanning); !r) {
    std::cout << "INVALID " << r.message << '\n';
    return kNo;
  }
  if (tour && fam.trails.size() != 1 && !(fam.trails.empty() && h.is_empty())) {
    std::cout << "INVALID family has " << fam.trails.size() << " trails, not a tour\n";
    return kNo;
  }
  std::cout << "OK " << (fam.trails.size() == 1 ? "tour" : "family k=" + std::to_string(fam.trails.size())) << '\n';
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler tours and families of hypergraphs"};
  app.require_subcommand(1);

  SolveArgs solve_args[4];
  const char* names[4] = {"check-family", "check-tour", "find-family", "find-tour"};
  CLI::App* solve_cmds[4];
  for (int i = 0; i < 4; ++i) {
    solve_cmds[i] = app.add_subcommand(names[i], i < 2 ? "decide existence" : "decide and print a certificate");
    add_solve_options(solve_cmds[i], solve_args[i]);
  }

  std::string cut_file;
  bool cut_json = false;
  auto* min_cut = app.add_subcommand("min-cut", "print a minimum edge cut");
  min_cut->add_option("FILE", cut_file)->required();
  min_cut->add_flag("--json", cut_json);

  std::string peel_file;
  auto* peel = app.add_subcommand("peel", "delete vertices of degree at most 1");
  peel->add_option("FILE", peel_file)->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate hypergraphs");
  gen->add_option("--n", gen_args.n, "maximum number of vertices");
  gen->add_option("--m", gen_args.m, "maximum number of edges");
  gen->add_option("--sizes", gen_args.sizes, "edge size range, A or A-B");
  gen->add_option("--seed", gen_args.seed);
  gen->add_flag("--exhaustive", gen_args.exhaustive, "every connected hypergraph up to isomorphism");
  gen->add_option("--count", gen_args.count, "instances to draw (uniform model)");
  gen->add_option("--out", gen_args.out, "directory for gen_NNNNN.hgr files (default: stdout)");

  std::string corpus;
  std::vector<std::string> strategies{"standard", "collapse", "oracle"};
  std::string bench_mode = "family";
  auto* bench = app.add_subcommand("bench", "run strategies over a corpus and compare");
  bench->add_option("--corpus", corpus, "directory of .hgr files")->required();
  bench->add_option("--strategies", strategies)->delimiter(',');
  bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"family", "tour", "both"}));

  std::string verify_file;
  std::string cert_file;
  bool verify_tour = false;
  bool verify_spanning = false;
  auto* verify = app.add_subcommand("verify", "check a certificate against a hypergraph");
  verify->add_option("FILE", verify_file)->required();
  verify->add_option("CERT", cert_file)->required();
  verify->add_flag("--tour", verify_tour, "require a single closed trail");
  verify->add_flag("--spanning", verify_spanning, "require every vertex to be an anchor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    for (int i = 0; i < 4; ++i) {
      if (*solve_cmds[i]) return run_solve(solve_args[i], i % 2 == 0 ? Mode::Family : Mode::Tour, i >= 2);
    }
    if (*min_cut) return run_min_cut(cut_file, cut_json);
    if (*peel) return run_peel(peel_file);
    if (*gen) return run_gen(gen_args);
    if (*bench) return run_bench_cmd(corpus, strategies, bench_mode);
    if (*verify) return run_verify(verify_file, cert_file, verify_tour, verify_spanning);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
