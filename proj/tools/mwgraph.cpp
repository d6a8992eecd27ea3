// mwgraph: modular decomposition of graphs and the solvers built on it.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mw/coloring.hpp"
#include "mw/errors.hpp"
#include "mw/gen.hpp"
#include "mw/graph.hpp"
#include "mw/ham.hpp"
#include "mw/io.hpp"
#include "mw/mdtree.hpp"
#include "mw/oracles.hpp"

using nlohmann::json;

namespace {

struct InputOpts {
  std::string path = "-";
  std::string format = "auto";
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("file,--input,-i", in.path, "input file, - for stdin");
  cmd->add_option("--format", in.format,
                  "graph6 | edgelist | dimacs (default: detect and warn)")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist", "dimacs"}));
}

mw::Graph read_graph(const InputOpts& in) {
  std::string bytes;
  if (in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream f(in.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input file: " + in.path);
    std::ostringstream ss;
    ss << f.rdbuf();
    bytes = ss.str();
  }
  mw::Format fmt;
  if (in.format == "graph6") fmt = mw::Format::Graph6;
  else if (in.format == "edgelist") fmt = mw::Format::EdgeList;
  else if (in.format == "dimacs") fmt = mw::Format::Dimacs;
  else {
    fmt = mw::detect_format(bytes);
    std::cerr << "note: format detected as " << mw::format_name(fmt)
              << "; pass --format to silence\n";
  }
  return mw::parse_graph(fmt, bytes);
}

// fan instances out over worker threads
void parallel_for(int jobs, int count, const std::function<void(int)>& body) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

double millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

struct CheckStats {
  std::atomic<int> tested{0};
  std::atomic<int> bad{0};
  std::mutex mu;
  std::vector<std::string> offenders;

  void flag(const mw::Graph& g, const std::string& what) {
    ++bad;
    std::lock_guard<std::mutex> lock(mu);
    offenders.push_back(mw::emit_graph(g, mw::Format::Graph6) + "  (" + what +
                        ")");
  }
};

void check_one(const mw::Graph& g, const mw::ColorOptions& copt,
               const mw::HamOptions& hopt, CheckStats& stats) {
  ++stats.tested;
  int chi = mw::chromatic_number(g, copt);
  if (chi != mw::oracles::brute_chromatic(g)) {
    stats.flag(g, "chromatic");
    return;
  }
  auto cw = mw::coloring_witness(g, copt);
  if (cw.colors_used != chi ||
      !mw::oracles::validate_coloring(g, cw.color, cw.colors_used)) {
    stats.flag(g, "coloring witness");
    return;
  }
  long long ham = mw::ham_number(g, hopt);
  if (ham != mw::oracles::brute_path_partition(g)) {
    stats.flag(g, "path partition");
    return;
  }
  auto paths = mw::path_partition_witness(g, hopt);
  if ((long long)paths.size() != ham ||
      !mw::oracles::validate_path_partition(g, paths)) {
    stats.flag(g, "path witness");
    return;
  }
  bool cyc = mw::hamiltonian_cycle(g, hopt);
  bool oracle_cyc = g.n >= 3 && mw::oracles::held_karp_hamiltonian(g);
  if (cyc != oracle_cyc) {
    stats.flag(g, "hamiltonian cycle");
    return;
  }
  auto cw2 = mw::hamiltonian_cycle_witness(g, hopt);
  if (cw2.has_value() != cyc || (cw2 && !mw::oracles::validate_cycle(g, *cw2))) {
    stats.flag(g, "cycle witness");
    return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular-width graph toolbox"};
  app.require_subcommand(1);

  InputOpts in;
  bool witness = false;
  bool dot = false;
  bool eager = false, lazy = false, linear = false, fast_mwp = false;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--eager-cuts", eager, "materialize all connectivity cuts");
    cmd->add_flag("--lazy-cuts", lazy,
                  "separate connectivity cuts lazily (default)");
    cmd->add_flag("--linear-scan", linear,
                  "scan extension sizes upward instead of binary search");
  };

  auto* cmd_decompose = app.add_subcommand("decompose", "print the parse tree");
  add_input_flags(cmd_decompose, in);
  cmd_decompose->add_flag("--dot", dot, "emit graphviz instead of JSON");

  auto* cmd_width = app.add_subcommand("width", "print the modular width");
  add_input_flags(cmd_width, in);

  auto* cmd_nd = app.add_subcommand("nd", "print the neighborhood diversity");
  add_input_flags(cmd_nd, in);

  auto* cmd_color = app.add_subcommand("color", "chromatic number");
  add_input_flags(cmd_color, in);
  cmd_color->add_flag("--witness", witness, "also emit a proper coloring");
  cmd_color->add_flag("--fast-mwp", fast_mwp,
                      "use the counting partition solver for the upper bound");

  auto* cmd_paths = app.add_subcommand("paths", "minimum path partition");
  add_input_flags(cmd_paths, in);
  cmd_paths->add_flag("--witness", witness, "also emit the paths");
  add_solver_flags(cmd_paths);

  auto* cmd_hampath = app.add_subcommand("hampath", "Hamiltonian path?");
  add_input_flags(cmd_hampath, in);
  add_solver_flags(cmd_hampath);

  auto* cmd_hamcycle = app.add_subcommand("hamcycle", "Hamiltonian cycle?");
  add_input_flags(cmd_hamcycle, in);
  cmd_hamcycle->add_flag("--witness", witness, "also emit the cycle");
  add_solver_flags(cmd_hamcycle);

  int gen_n = 10, gen_width = 4;
  std::uint64_t seed = 1;
  std::string named;
  std::string out_format = "graph6";
  bool connected_quotient = false;
  auto* cmd_gen = app.add_subcommand("gen", "generate graphs");
  cmd_gen->add_option("--n", gen_n, "vertex count");
  cmd_gen->add_option("--width", gen_width, "modular width bound");
  cmd_gen->add_option("--seed", seed, "PRNG seed");
  cmd_gen->add_option("--named", named,
                      "family spec, e.g. 'cycle 5' or 'petersen'");
  cmd_gen->add_flag("--connected-quotient", connected_quotient,
                    "resample quotients until connected");
  cmd_gen->add_option("--out-format", out_format, "graph6 | edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  int max_n = 6, random_count = 0, jobs = 1;
  bool all_connected = false;
  auto* cmd_check = app.add_subcommand("check", "compare against oracles");
  cmd_check->add_flag("--all-connected", all_connected,
                      "every connected graph up to --max-n, one per class");
  cmd_check->add_option("--max-n", max_n, "largest vertex count");
  cmd_check->add_option("--random", random_count, "additional random graphs");
  cmd_check->add_option("--seed", seed, "PRNG seed");
  cmd_check->add_option("--jobs", jobs, "worker threads");
  cmd_check->add_flag("--fast-mwp", fast_mwp, "exercise the counting solver");
  add_solver_flags(cmd_check);

  std::string sizes = "250,500,1000,2000";
  int reps = 2;
  auto* cmd_bench =
      app.add_subcommand("bench", "CSV timing over generated graphs");
  cmd_bench->add_option("--width", gen_width, "modular width bound");
  cmd_bench->add_option("--sizes", sizes, "comma-separated vertex counts");
  cmd_bench->add_option("--seed", seed, "PRNG seed");
  cmd_bench->add_option("--reps", reps, "instances per size");
  cmd_bench->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);
  mw::ColorOptions copt;
  mw::HamOptions hopt;
  copt.fast_mwp = fast_mwp;
  hopt.eager_cuts = eager && !lazy;
  hopt.linear_scan = linear;

  try {
    if (*cmd_decompose) {
      mw::ParseTree t = mw::modular_decomposition(read_graph(in));
      std::cout << (dot ? mw::to_dot(t) : mw::to_json(t)) << "\n";
    } else if (*cmd_width) {
      std::cout << mw::modular_width(mw::modular_decomposition(read_graph(in)))
                << "\n";
    } else if (*cmd_nd) {
      std::cout << mw::neighborhood_diversity(read_graph(in)).first << "\n";
    } else if (*cmd_color) {
      mw::Graph g = read_graph(in);
      json out;
      out["schema"] = "mw.color/1";
      out["n"] = g.n;
      out["tree_width_used"] = mw::modular_width(mw::modular_decomposition(g));
      if (witness) {
        auto w = mw::coloring_witness(g, copt);
        out["chi"] = w.colors_used;
        out["witness"] = w.color;
      } else {
        out["chi"] = mw::chromatic_number(g, copt);
      }
      std::cout << out.dump() << "\n";
    } else if (*cmd_paths) {
      mw::Graph g = read_graph(in);
      json out;
      out["schema"] = "mw.paths/1";
      out["size"] = g.n;
      if (witness) {
        auto paths = mw::path_partition_witness(g, hopt);
        out["ham"] = paths.size();
        out["witness"] = paths;
      } else {
        out["ham"] = mw::ham_number(g, hopt);
      }
      std::cout << out.dump() << "\n";
    } else if (*cmd_hampath) {
      bool yes = mw::hamiltonian_path(read_graph(in), hopt);
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    } else if (*cmd_hamcycle) {
      mw::Graph g = read_graph(in);
      if (witness) {
        auto w = mw::hamiltonian_cycle_witness(g, hopt);
        json out;
        out["schema"] = "mw.cycle/1";
        out["size"] = g.n;
        out["ham"] = mw::ham_number(g, hopt);
        out["hamiltonian"] = w.has_value();
        if (w) out["witness"] = *w;
        std::cout << out.dump() << "\n";
        return w ? 0 : 1;
      }
      bool yes = mw::hamiltonian_cycle(g, hopt);
      std::cout << (yes ? "yes" : "no") << "\n";
      return yes ? 0 : 1;
    } else if (*cmd_gen) {
      mw::Graph g;
      if (!named.empty()) {
        g = mw::gen_named(named);
      } else {
        mw::GenOptions gopt;
        gopt.connected_quotient = connected_quotient;
        g = mw::gen_bounded_mw(gen_n, gen_width, seed, gopt);
      }
      mw::Format f =
          out_format == "graph6" ? mw::Format::Graph6 : mw::Format::EdgeList;
      std::cout << mw::emit_graph(g, f);
      if (f == mw::Format::Graph6) std::cout << "\n";
    } else if (*cmd_check) {
      std::vector<mw::Graph> corpus;
      if (all_connected)
        for (int n = 1; n <= max_n; ++n)
          for (auto& g : mw::enumerate_connected_graphs(n))
            corpus.push_back(std::move(g));
      mw::SplitMix64 rng(seed);
      for (int i = 0; i < random_count; ++i)
        corpus.push_back(mw::gen_random(1 + (int)rng.below(max_n),
                                        20 + 20 * (i % 4), rng.next()));
      CheckStats stats;
      parallel_for(jobs, (int)corpus.size(),
                   [&](int i) { check_one(corpus[i], copt, hopt, stats); });
      std::cout << "checked " << stats.tested << " graphs, " << stats.bad
                << " mismatches\n";
      if (stats.bad > 0) {
        for (const auto& s : stats.offenders) std::cout << "  " << s << "\n";
        return 3;
      }
    } else if (*cmd_bench) {
      std::vector<int> ns;
      std::stringstream ss(sizes);
      std::string tok;
      while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
      std::cout << "n,mw,op,millis\n";
      struct Row {
        int n, mwv;
        const char* op;
        double ms;
      };
      std::vector<Row> rows;
      std::mutex mu;
      std::vector<std::pair<int, std::uint64_t>> tasks;
      mw::SplitMix64 rng(seed);
      for (int n : ns)
        for (int r = 0; r < reps; ++r) tasks.emplace_back(n, rng.next());
      parallel_for(jobs, (int)tasks.size(), [&](int i) {
        auto [n, s] = tasks[i];
        mw::Graph g = mw::gen_bounded_mw(n, gen_width, s);
        int w = mw::modular_width(mw::modular_decomposition(g));
        auto t0 = std::chrono::steady_clock::now();
        mw::chromatic_number(g, copt);
        double c_ms = millis_since(t0);
        t0 = std::chrono::steady_clock::now();
        mw::ham_number(g, hopt);
        double h_ms = millis_since(t0);
        std::lock_guard<std::mutex> lock(mu);
        rows.push_back({n, w, "color", c_ms});
        rows.push_back({n, w, "paths", h_ms});
      });
      for (const auto& r : rows)
        std::printf("%d,%d,%s,%.3f\n", r.n, r.mwv, r.op, r.ms);
    }
  } catch (const mw::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
