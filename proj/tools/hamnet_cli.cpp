#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hamnet/cycles.hpp"
#include "hamnet/fixtures.hpp"
#include "hamnet/hull.hpp"
#include "hamnet/net_io.hpp"
#include "hamnet/svg.hpp"
#include "hamnet/unfold.hpp"
#include "hamnet/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // validation / verification failure
constexpr int kExitUsage = 2;  // bad arguments or malformed input names

struct Options {
  std::string fixture;
  std::string off_path;
  std::string cycle;
  std::string edge;
  std::string net_path;
  std::string out_path;
  std::string format = "json";
  long limit = -1;
  std::uint64_t seed = 1;
  bool all_cycles = false;
  bool allow_nonconvex = false;
  bool dedupe = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input source: a named fixture, "random<N>" (hull of N seeded random sphere
// points), or an OFF file.
hamnet::Polyhedron load_input(const Options& opt, std::string* name) {
  using namespace hamnet;
  if (!opt.fixture.empty() && !opt.off_path.empty()) {
    throw UsageError("give exactly one of --fixture and --off");
  }
  if (!opt.fixture.empty()) {
    *name = opt.fixture;
    if (opt.fixture.rfind("random", 0) == 0) {
      int n = std::stoi(opt.fixture.substr(6));
      return corpus_gen(n, opt.seed);
    }
    try {
      return fixture(opt.fixture);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!opt.off_path.empty()) {
    std::ifstream in(opt.off_path);
    if (!in) throw UsageError("cannot open " + opt.off_path);
    *name = opt.off_path;
    return load_off(in);
  }
  throw UsageError("an input source (--fixture or --off) is required");
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open " + opt.out_path + " for writing");
    out << text;
  }
}

hamnet::Edge parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--edge expects I,J (1-based)");
  int a = std::stoi(text.substr(0, comma));
  int b = std::stoi(text.substr(comma + 1));
  if (a < 1 || b < 1) throw UsageError("--edge indices are 1-based");
  return hamnet::make_edge(a - 1, b - 1);
}

// Accepts both "1-5-6-2" and compact digit strings like "15623784".
std::vector<int> parse_cycle_arg(const std::string& text) {
  if (text.find('-') != std::string::npos) return hamnet::parse_cycle_string(text);
  return hamnet::parse_cycle_compact(text);
}

int require_valid(const hamnet::Polyhedron& P, const Options& opt) {
  auto rep = hamnet::validate(P, !opt.allow_nonconvex);
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks) {
      if (!c.pass) std::cerr << "validation failed: " << c.name << " (" << c.detail << ")\n";
    }
    return kExitFail;
  }
  return kExitOk;
}

// Checks the user-supplied cycle; on an angle violation, reports the vertex
// and its side angles.
hamnet::HamCycle require_quasigeodesic(const hamnet::Polyhedron& P,
                                       const std::vector<int>& verts) {
  using namespace hamnet;
  HamCycle Q = make_ham_cycle(P, verts);
  SideSplit t;
  if (!is_quasigeodesic(P, Q, &t)) {
    std::ostringstream msg;
    msg << "cycle is not a quasigeodesic:";
    for (size_t i = 0; i < t.verts.size(); ++i) {
      if (t.left[i] > std::numbers::pi + kTolAngle ||
          t.right[i] > std::numbers::pi + kTolAngle) {
        msg << " vertex " << t.verts[i] + 1 << " has side angles ("
            << t.left[i] / std::numbers::pi << " pi, " << t.right[i] / std::numbers::pi
            << " pi)";
      }
    }
    throw CycleError(msg.str());
  }
  return Q;
}

int cmd_validate(const Options& opt) {
  std::string name;
  hamnet::Polyhedron P = load_input(opt, &name);
  auto rep = hamnet::validate(P, !opt.allow_nonconvex);
  write_output(opt, hamnet::validation_to_json(rep).dump(2) + "\n");
  return rep.all_pass() ? kExitOk : kExitFail;
}

int cmd_search(const Options& opt) {
  std::string name;
  hamnet::Polyhedron P = load_input(opt, &name);
  if (int rc = require_valid(P, opt)) return rc;
  auto cycles = opt.all_cycles ? hamnet::find_ham_cycles(P, opt.limit)
                               : hamnet::find_ham_quasigeodesics(P, opt.limit);
  std::ostringstream out;
  for (const auto& c : cycles) out << hamnet::format_cycle(c) << "\n";
  out << cycles.size() << (opt.all_cycles ? " Hamiltonian circuits"
                                          : " Hamiltonian quasigeodesics")
      << "\n";
  write_output(opt, out.str());
  return kExitOk;
}

int cmd_unfold(const Options& opt) {
  std::string name;
  hamnet::Polyhedron P = load_input(opt, &name);
  if (int rc = require_valid(P, opt)) return rc;
  if (opt.cycle.empty()) throw UsageError("--cycle is required");
  if (opt.edge.empty()) throw UsageError("--edge is required");
  hamnet::HamCycle Q = require_quasigeodesic(P, parse_cycle_arg(opt.cycle));
  hamnet::Edge e = parse_edge(opt.edge);
  if (!Q.has_edge(e[0], e[1])) {
    throw hamnet::CycleError("edge " + std::to_string(e[0] + 1) + "," +
                             std::to_string(e[1] + 1) + " is not on the cycle");
  }
  auto [A, B] = hamnet::partition(P, Q);
  hamnet::Net net = hamnet::join(P, Q, A, B, hamnet::unfold_half(P, A),
                                 hamnet::unfold_half(P, B), e);
  net.polyhedron = name;
  if (opt.format == "svg") {
    write_output(opt, hamnet::emit_svg(P, net));
  } else {
    write_output(opt, hamnet::net_to_json(net).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_nets(const Options& opt) {
  std::string name;
  hamnet::Polyhedron P = load_input(opt, &name);
  if (int rc = require_valid(P, opt)) return rc;
  if (opt.cycle.empty()) throw UsageError("--cycle is required");
  hamnet::HamCycle Q = require_quasigeodesic(P, parse_cycle_arg(opt.cycle));
  auto nets = hamnet::enumerate_nets(P, Q, opt.dedupe);
  bool all_ok = true;
  hamnet::json arr = hamnet::json::array();
  for (auto& net : nets) {
    net.polyhedron = name;
    auto outcome = hamnet::verify_net(P, net);
    all_ok = all_ok && outcome.all_pass();
    arr.push_back(hamnet::net_to_json(net));
  }
  std::ostringstream summary;
  summary << nets.size() << " net(s) for cycle " << hamnet::format_cycle(Q)
          << (opt.dedupe ? " (deduplicated)" : "") << ", verification "
          << (all_ok ? "passed" : "FAILED") << "\n";
  if (!opt.out_path.empty()) {
    write_output(opt, arr.dump(2) + "\n");
    std::cout << summary.str();
  } else {
    std::cout << summary.str();
  }
  return all_ok ? kExitOk : kExitFail;
}

int cmd_verify(const Options& opt) {
  using namespace hamnet;
  if (opt.net_path.empty()) throw UsageError("a net JSON path is required");
  std::ifstream in(opt.net_path);
  if (!in) throw UsageError("cannot open " + opt.net_path);
  json j = json::parse(in);
  Options src = opt;
  if (src.fixture.empty() && src.off_path.empty()) {
    src.fixture = j.at("polyhedron").get<std::string>();
  }
  std::string name;
  Polyhedron P = load_input(src, &name);
  Net net = net_from_json(j, P);
  auto outcome = verify_net(P, net);
  write_output(opt, verification_to_json(outcome).dump(2) + "\n");
  return outcome.all_pass() ? kExitOk : kExitFail;
}

// End-to-end reproduction of the three worked examples: the half-octahedron
// pyramid (Q=12534), the octahedron (Q=123645) and the cube napkin holder
// (Q=15623784). Every enumerated net must verify.
int cmd_demo(const Options& opt) {
  using namespace hamnet;
  struct Example {
    const char* fixture;
    const char* cycle;
  };
  const Example examples[] = {
      {"square_pyramid_octa_half", "12534"},
      {"octahedron", "123645"},
      {"cube", "15623784"},
  };
  bool all_ok = true;
  for (const auto& ex : examples) {
    Polyhedron P = fixture(ex.fixture);
    HamCycle Q = make_ham_cycle(P, parse_cycle_compact(ex.cycle));
    SideSplit t;
    bool qg = is_quasigeodesic(P, Q, &t);
    auto found = find_ham_quasigeodesics(P);
    bool in_search = std::find(found.begin(), found.end(), Q) != found.end();
    auto nets = enumerate_nets(P, Q);
    bool nets_ok = true;
    for (auto& net : nets) {
      net.polyhedron = ex.fixture;
      nets_ok = nets_ok && verify_net(P, net).all_pass();
    }
    std::cout << ex.fixture << " Q=" << ex.cycle << ": quasigeodesic="
              << (qg ? "yes" : "NO") << " found-by-search=" << (in_search ? "yes" : "NO")
              << " nets=" << nets.size() << " verified=" << (nets_ok ? "yes" : "NO")
              << "\n";
    all_ok = all_ok && qg && in_search && nets_ok;
    if (!opt.out_path.empty()) {
      for (size_t i = 0; i < nets.size(); ++i) {
        std::string base = opt.out_path + "/" + ex.fixture + "_net" + std::to_string(i);
        std::ofstream js(base + ".json", std::ios::binary);
        js << net_to_json(nets[i]).dump(2) << "\n";
        std::ofstream svg(base + ".svg", std::ios::binary);
        svg << emit_svg(P, nets[i]);
      }
    }
  }
  std::cout << (all_ok ? "demo: all checks passed" : "demo: FAILURES") << "\n";
  return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian quasigeodesics and edge-unfolding nets on convex polyhedra"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fixture", opt.fixture, "built-in solid (or randomN with --seed)");
    sub->add_option("--off", opt.off_path, "OFF file path");
    sub->add_option("--limit", opt.limit, "max number of cycles to report");
    sub->add_option("--seed", opt.seed, "seed for random input generation");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
    sub->add_option("--format", opt.format, "json|svg")
        ->check(CLI::IsMember({"json", "svg"}));
    sub->add_flag("--allow-nonconvex", opt.allow_nonconvex,
                  "skip the convexity check only");
    return sub;
  };

  auto* validate_cmd = add_common(app.add_subcommand("validate", "mesh validation report"));
  auto* search_cmd = add_common(app.add_subcommand("search", "list Hamiltonian quasigeodesics"));
  search_cmd->add_flag("--all-cycles", opt.all_cycles, "list plain Hamiltonian circuits");
  auto* unfold_cmd = add_common(app.add_subcommand("unfold", "cycle + edge -> net JSON/SVG"));
  unfold_cmd->add_option("--cycle", opt.cycle, "cycle, e.g. 1-5-6-2-3-7-8-4");
  unfold_cmd->add_option("--edge", opt.edge, "join edge I,J (1-based)");
  auto* nets_cmd = add_common(app.add_subcommand("nets", "enumerate all nets for a cycle"));
  nets_cmd->add_option("--cycle", opt.cycle, "cycle, e.g. 1-5-6-2-3-7-8-4");
  nets_cmd->add_flag("--dedupe", opt.dedupe, "drop congruent duplicates");
  auto* verify_cmd = add_common(app.add_subcommand("verify", "verify a net JSON"));
  verify_cmd->add_option("net", opt.net_path, "net JSON path");
  auto* demo_cmd = add_common(app.add_subcommand("demo", "reproduce the three worked examples"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt);
    if (search_cmd->parsed()) return cmd_search(opt);
    if (unfold_cmd->parsed()) return cmd_unfold(opt);
    if (nets_cmd->parsed()) return cmd_nets(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (demo_cmd->parsed()) return cmd_demo(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamnet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const hamnet::CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
