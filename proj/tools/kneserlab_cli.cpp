// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "kneserlab/kneserlab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

struct SetSystemDeleter {
  void operator()(kl_set_system* p) const { kl_set_system_free(p); }
};
struct HypergraphDeleter {
  void operator()(kl_hypergraph* p) const { kl_hypergraph_free(p); }
};
struct ComplexDeleter {
  void operator()(kl_complex* p) const { kl_complex_free(p); }
};
using SetSystemPtr = std::unique_ptr<kl_set_system, SetSystemDeleter>;
using HypergraphPtr = std::unique_ptr<kl_hypergraph, HypergraphDeleter>;
using ComplexPtr = std::unique_ptr<kl_complex, ComplexDeleter>;

// A verification status maps to exit 1, everything else to exit 2.
struct ApiFailure {
  kl_status status;
  std::string message;
};

void check(kl_status st) {
  if (st != KL_OK) throw ApiFailure{st, kl_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  kl_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CliError{"cannot write " + path};
}

std::string instance_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

SetSystemPtr load_system(const std::string& path) {
  kl_set_system* t = nullptr;
  check(kl_set_system_parse(read_file(path).c_str(), &t));
  return SetSystemPtr(t);
}

kl_variant parse_variant(const std::string& v) {
  if (v == "kg" || v == "set") return KL_SET_EDGES;
  if (v == "KG" || v == "multiset") return KL_MULTISET_EDGES;
  throw CliError{"unknown variant " + v + " (expected kg or KG)"};
}

HypergraphPtr build_hypergraph(const kl_set_system* t, int r, int s, const std::string& variant) {
  kl_hypergraph* h = nullptr;
  check(kl_hypergraph_build(t, r, s, parse_variant(variant), &h));
  return HypergraphPtr(h);
}

struct Common {
  std::string input;
  int r = 0;
  int s = 0;
  std::string variant = "KG";
  std::string out;
  std::uint64_t budget = 0;
  bool timings = false;
  std::size_t max_faces = 0;
  std::size_t max_nonzeros = 0;

  kl_guard guard() const {
    kl_guard g = kl_default_guard();
    if (max_faces) g.max_faces = max_faces;
    if (max_nonzeros) g.max_nonzeros = max_nonzeros;
    return g;
  }
};

void add_instance_options(CLI::App* cmd, Common& c, bool required = true) {
  cmd->add_option("--input", c.input, "Set-system instance file")->check(CLI::ExistingFile)->required(required);
  cmd->add_option("--r", c.r, "Uniformity r")->required();
  cmd->add_option("--s", c.s, "Disjointness s")->required();
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget", c.budget, "Solver node budget (default: KNESERLAB_NODE_BUDGET or built-in)");
}

void add_guards(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-faces", c.max_faces, "Face guard per complex");
  cmd->add_option("--max-nonzeros", c.max_nonzeros, "Nonzero guard per boundary matrix");
}

int run_build(const Common& c) {
  auto t = load_system(c.input);
  auto h = build_hypergraph(t.get(), c.r, c.s, c.variant);
  char* text = nullptr;
  check(kl_hypergraph_serialize(h.get(), &text));
  write_output(c.out, take(text));
  return kExitPass;
}

int run_defect(const Common& c, bool oracle) {
  auto t = load_system(c.input);
  kl_defect_result res{};
  char* witness = nullptr;
  check(kl_defect(t.get(), c.r, c.s, c.budget, &res, &witness));
  const std::string w = take(witness);
  std::ostringstream out;
  out << "instance\tn\tm\tr\ts\tcd\tmax_cover\tdefect_witness";
  if (oracle) out << "\toracle_cd";
  out << "\n"
      << instance_id(c.input) << '\t' << kl_set_system_ground_size(t.get()) << '\t' << kl_set_system_size(t.get())
      << '\t' << c.r << '\t' << c.s << '\t' << res.value << '\t' << res.max_cover << '\t' << w;
  int code = kExitPass;
  if (oracle) {
    int o = 0;
    check(kl_defect_oracle(t.get(), c.r, c.s, &o));
    out << '\t' << o;
    if (o != res.value) code = kExitFail;
  }
  out << "\n";
  write_output(c.out, out.str());
  return code;
}

int run_chi(const Common& c, const std::string& hypergraph_file) {
  HypergraphPtr h;
  std::string id;
  if (!hypergraph_file.empty()) {
    kl_hypergraph* raw = nullptr;
    check(kl_hypergraph_parse(read_file(hypergraph_file).c_str(), &raw));
    h.reset(raw);
    id = instance_id(hypergraph_file);
  } else {
    if (c.input.empty()) throw CliError{"chi needs --input with --r/--s, or --hypergraph"};
    auto t = load_system(c.input);
    h = build_hypergraph(t.get(), c.r, c.s, c.variant);
    id = instance_id(c.input);
  }
  int chi = 0;
  char* colours = nullptr;
  check(kl_chromatic(h.get(), c.budget, &chi, &colours));
  std::string lines = take(colours);
  std::string compact;
  std::istringstream in(lines);
  std::string word;
  int node = 0;
  int colour = 0;
  while (in >> word >> node >> colour) compact += (compact.empty() ? "" : ",") + std::to_string(colour);
  std::ostringstream out;
  out << "instance\tm\tr\tedges\tchi\tcolouring\n"
      << id << '\t' << kl_hypergraph_node_count(h.get()) << '\t' << kl_hypergraph_uniformity(h.get()) << '\t'
      << kl_hypergraph_edge_count(h.get()) << '\t' << chi << '\t' << (compact.empty() ? "-" : compact) << "\n";
  write_output(c.out, out.str());
  return kExitPass;
}

int run_bound(const Common& c, const std::string& mode, bool oracle) {
  unsigned flags = 0;
  if (mode == "comb" || mode == "both") flags |= KL_BOUND_COMB;
  if (mode == "topo" || mode == "both") flags |= KL_BOUND_TOPO;
  if (oracle) flags |= KL_BOUND_ORACLE;
  if (c.timings) flags |= KL_BOUND_TIMINGS;
  auto t = load_system(c.input);
  char* tsv = nullptr;
  char* note = nullptr;
  int pass = 0;
  check(kl_bound_report(instance_id(c.input).c_str(), t.get(), c.r, c.s, flags, c.budget, &tsv, &note, &pass));
  const std::string n = take(note);
  if (!n.empty()) std::cerr << "skip: topological bound: " << n << "\n";
  write_output(c.out, take(tsv));
  return pass ? kExitPass : kExitFail;
}

struct HomologyArgs {
  std::string kind;
  int p = 2;
  int n = 0;
  int m = 0;
  int w = 0;
  std::string file;
  std::string export_path;
  bool subdivide = false;
};

int run_homology(const Common& c, const HomologyArgs& a) {
  const kl_guard g = c.guard();
  kl_complex* raw = nullptr;
  if (a.kind == "box") {
    if (c.input.empty()) throw CliError{"--complex box needs --input, --r and --s"};
    auto t = load_system(c.input);
    auto h = build_hypergraph(t.get(), c.r, c.s, c.variant);
    check(kl_complex_box(h.get(), &g, &raw));
  } else if (a.kind == "deleted-join") {
    check(kl_complex_deleted_join(a.n, c.r, a.w ? a.w : c.s + 1, &g, &raw));
  } else if (a.kind == "order") {
    check(kl_complex_order(a.n, c.r, c.s, &g, &raw));
  } else if (a.kind == "colour") {
    check(kl_complex_colour(a.m, c.r, &g, &raw));
  } else if (a.kind == "file") {
    if (a.file.empty()) throw CliError{"--complex file needs --file"};
    check(kl_complex_parse(read_file(a.file).c_str(), &raw));
  } else {
    throw CliError{"unknown complex kind " + a.kind};
  }
  ComplexPtr k(raw);
  if (a.subdivide) {
    kl_complex* sd = nullptr;
    check(kl_complex_subdivide(k.get(), &g, &sd));
    k.reset(sd);
  }
  if (!a.export_path.empty()) {
    char* text = nullptr;
    check(kl_complex_serialize(k.get(), &text));
    write_output(a.export_path, take(text));
  }
  kl_betti_summary summary{};
  char* table = nullptr;
  check(kl_homology(k.get(), a.p, &g, &summary, &table));
  write_output(c.out, take(table));
  std::cerr << "faces " << kl_complex_face_count(k.get()) << ", dim " << summary.dim << ", connectivity "
            << summary.connectivity << (summary.acyclic ? " (acyclic)" : "") << "\n";
  return summary.euler_ok && summary.boundary_ok ? kExitPass : kExitFail;
}

int run_verify(const Common& c, const kl_random_spec& spec, int count) {
  char* tsv = nullptr;
  int failures = 0;
  check(kl_verify_suite(&spec, count, c.budget, c.timings ? 1 : 0, &tsv, &failures));
  write_output(c.out, take(tsv));
  if (failures) std::cerr << failures << " of " << count << " instances failed\n";
  return failures ? kExitFail : kExitPass;
}

int run_repro(const Common& c) {
  char* tsv = nullptr;
  int pass = 0;
  check(kl_reproduce_worked(c.budget, c.timings ? 1 : 0, &tsv, &pass));
  write_output(c.out, take(tsv));
  return pass ? kExitPass : kExitFail;
}

int run_gen(const Common& c, const kl_random_spec& spec, std::optional<int> index, int n, int m) {
  kl_set_system* raw = nullptr;
  std::string header;
  if (index) {
    int r = 0;
    int s = 0;
    check(kl_random_instance(&spec, *index, &raw, &r, &s));
    header = "# r " + std::to_string(r) + " s " + std::to_string(s) + "\n";
  } else {
    if (n <= 0 || m <= 0) throw CliError{"gen needs --n and --m, or --index"};
    check(kl_set_system_random(spec.seed, n, m, spec.max_set_size, &raw));
  }
  SetSystemPtr t(raw);
  char* text = nullptr;
  check(kl_set_system_serialize(t.get(), &text));
  write_output(c.out, header + take(text));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kneser hypergraph colouring bounds: exact solvers, homology and proof checks"};
  app.require_subcommand(1);
  Common c;
  kl_random_spec spec = kl_default_random_spec();

  auto* build = app.add_subcommand("build", "Build kg or KG from a set system");
  add_instance_options(build, c);
  build->add_option("--variant", c.variant, "kg (set edges) or KG (multiset edges)")->required();
  build->add_option("--out", c.out, "Output file (default: stdout)");

  bool oracle = false;
  auto* defect = app.add_subcommand("defect", "Exact colourability defect with witness");
  add_instance_options(defect, c);
  add_budget(defect, c);
  defect->add_flag("--oracle", oracle, "Cross-check with exhaustive enumeration (n*r <= 20)");
  defect->add_option("--out", c.out, "Output file");

  std::string hypergraph_file;
  auto* chi = app.add_subcommand("chi", "Exact chromatic number with lex-least optimal colouring");
  chi->add_option("--input", c.input, "Set-system instance file")->check(CLI::ExistingFile);
  chi->add_option("--r", c.r, "Uniformity r");
  chi->add_option("--s", c.s, "Disjointness s");
  chi->add_option("--variant", c.variant, "kg or KG");
  chi->add_option("--hypergraph", hypergraph_file, "Hypergraph file instead of --input")->check(CLI::ExistingFile);
  add_budget(chi, c);
  chi->add_option("--out", c.out, "Output file");

  std::string mode = "both";
  auto* bound = app.add_subcommand("bound", "Bound chain for one instance as a TSV row");
  add_instance_options(bound, c);
  bound->add_option("--mode", mode, "comb, topo or both")->check(CLI::IsMember({"comb", "topo", "both"}));
  bound->add_flag("--oracle", oracle, "Also run the exhaustive defect oracle");
  bound->add_flag("--timings", c.timings, "Append a seconds column");
  add_budget(bound, c);
  bound->add_option("--out", c.out, "Output file");

  HomologyArgs ha;
  auto* homology = app.add_subcommand("homology", "Reduced Betti numbers over Z_p");
  homology->add_option("--complex", ha.kind, "box, deleted-join, order, colour or file")
      ->required()
      ->check(CLI::IsMember({"box", "deleted-join", "order", "colour", "file"}));
  homology->add_option("--p", ha.p, "Prime field characteristic")->default_val(2);
  homology->add_option("--input", c.input, "Instance file (box)")->check(CLI::ExistingFile);
  homology->add_option("--r", c.r, "Number of copies / uniformity");
  homology->add_option("--s", c.s, "Disjointness s (box, order; deleted-join uses w = s+1)");
  homology->add_option("--variant", c.variant, "kg or KG (box)");
  homology->add_option("--n", ha.n, "Ground size (deleted-join, order)");
  homology->add_option("--m", ha.m, "Number of colours (colour)");
  homology->add_option("--w", ha.w, "Deleted-join width (overrides s+1)");
  homology->add_option("--file", ha.file, "Complex file (file)")->check(CLI::ExistingFile);
  homology->add_flag("--subdivide", ha.subdivide, "Take the barycentric subdivision first");
  homology->add_option("--export", ha.export_path, "Write the complex in vertex/facet format");
  add_guards(homology, c);
  homology->add_option("--out", c.out, "Output file");

  int count = 100;
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--seed", spec.seed, "Seed")->required();
    cmd->add_option("--n-max", spec.n_max, "Largest ground size");
    cmd->add_option("--m-max", spec.m_max, "Largest family size");
    cmd->add_option("--max-set-size", spec.max_set_size, "Largest member size");
    cmd->add_option("--r-min", spec.r_min, "Smallest r");
    cmd->add_option("--r-max", spec.r_max, "Largest r");
    cmd->add_option("--s-max", spec.s_max, "Largest s (0: r-1)");
  };
  auto* verify = app.add_subcommand("verify", "Seeded random bound-chain suite");
  add_spec(verify);
  verify->add_option("--count", count, "Number of instances");
  verify->add_flag("--timings", c.timings, "Append a seconds column");
  add_budget(verify, c);
  verify->add_option("--out", c.out, "Output file");

  auto* repro = app.add_subcommand("repro", "Golden rows for the three worked instances");
  repro->add_flag("--timings", c.timings, "Append a seconds column");
  add_budget(repro, c);
  repro->add_option("--out", c.out, "Output file");

  std::optional<int> index;
  int gen_n = 0;
  int gen_m = 0;
  auto* gen = app.add_subcommand("gen", "Write a random set system");
  add_spec(gen);
  gen->add_option("--n", gen_n, "Ground size");
  gen->add_option("--m", gen_m, "Number of sets");
  gen->add_option("--index", index, "Emit instance INDEX of the verify stream instead");
  gen->add_option("--out", c.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (*build) return run_build(c);
    if (*defect) return run_defect(c, oracle);
    if (*chi) return run_chi(c, hypergraph_file);
    if (*bound) return run_bound(c, mode, oracle);
    if (*homology) return run_homology(c, ha);
    if (*verify) return run_verify(c, spec, count);
    if (*repro) return run_repro(c);
    if (*gen) return run_gen(c, spec, index, gen_n, gen_m);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == KL_VERIFICATION ? kExitFail : kExitError;
  }
  return kExitError;
}
