#include "faceflip/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "faceflip/flip.hpp"
#include "faceflip/flip_graph.hpp"
#include "faceflip/io.hpp"
#include "faceflip/miura.hpp"
#include "faceflip/square_minflip.hpp"
#include "faceflip/triangle.hpp"
#include "faceflip/validity.hpp"

namespace faceflip {

namespace {

const char* kSchemaHelp =
    "Document format (JSON):\n"
    "  {\"format_version\": 1,\n"
    "   \"pattern\": {\"family\": \"square|miura|triangle|huffman|twist\", \"params\": {...}},\n"
    "   \"assignment\": [{\"edge\": <id>, \"mv\": \"M\"|\"V\"}, ...],\n"
    "   \"metadata\": {\"key\": \"value\"}}\n"
    "Params: square {m,n}; miura and huffman {m,n,alpha}; triangle {rows,cols} or {radius};\n"
    "twist {k,l}. alpha is a string such as \"60\" or \"135/2\".\n";

// Usage problems that surface after parsing (bad files, bad combinations).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failures of the requested computation on well-formed input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  bool stdin_used = false;

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used) throw UsageError("standard input can be read only once");
      stdin_used = true;
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
};

Document load(Streams& io, const std::string& path) { return parse_document(io.read(path)); }

struct PatternFlags {
  std::string family;
  int m = 0, n = 0, rows = 0, cols = 0, radius = 0, k = 0, l = 0;
  std::string alpha = "60";

  void add(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", family, "square, miura, triangle, huffman or twist");
    if (required) opt->required();
    cmd->add_option("--m", m, "rows of faces (square, miura, huffman)");
    cmd->add_option("--n", n, "columns of faces (square, miura, huffman)");
    cmd->add_option("--alpha", alpha, "acute angle in degrees, e.g. 60 or 135/2");
    cmd->add_option("--rows", rows, "triangle region rows");
    cmd->add_option("--cols", cols, "triangle region columns");
    cmd->add_option("--radius", radius, "triangle hexagon radius (instead of rows/cols)");
    cmd->add_option("--k", k, "square twist rows");
    cmd->add_option("--l", l, "square twist columns");
  }

  CreasePattern build() const {
    auto f = family_from_name(family);
    if (!f) throw UsageError("unknown family \"" + family + "\"");
    PatternParams p;
    p.m = m;
    p.n = n;
    p.rows = rows;
    p.cols = cols;
    p.radius = radius;
    p.k = k;
    p.l = l;
    if (*f == Family::Miura || *f == Family::HuffmanGrid) {
      try {
        p.alpha = parse_angle(alpha);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    try {
      return build_pattern(*f, p);
    } catch (const PatternError& e) {
      throw UsageError(e.what());
    }
  }
};

void require_family(const Document& d, const std::string& family) {
  if (!family.empty() && family_name(d.pattern.family()) != family)
    throw UsageError("documents describe a " + family_name(d.pattern.family()) + " pattern, not " + family);
}

void require_same_pattern(const Document& a, const Document& b) {
  if (a.pattern.family() != b.pattern.family() || !(a.pattern.params() == b.pattern.params()))
    throw UsageError("the two documents describe different patterns");
}

void require_valid(const Document& d, const std::string& which) {
  if (!is_locally_valid(d.mu, d.pattern)) throw DomainError(which + " is not locally valid");
}

std::string sequence_text(const FlipSequence& seq) {
  std::string s;
  for (FaceId f : seq) s += std::to_string(f) + "\n";
  return s;
}

std::vector<FaceId> parse_faces(const std::string& list) {
  std::vector<FaceId> faces;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int f = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      faces.push_back(f);
    } catch (const std::exception&) {
      throw UsageError("bad face id \"" + item + "\"");
    }
  }
  return faces;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face-flip reconfiguration of flat-origami crease patterns"};
  app.require_subcommand(1);
  app.footer(kSchemaHelp);
  Streams io{in, out};
  std::string output = "-";

  // gen
  auto* gen = app.add_subcommand("gen", "generate a pattern with an assignment");
  PatternFlags gen_flags;
  gen_flags.add(gen, true);
  std::string preset = "canonical";
  std::string mv_file;
  std::uint64_t seed = 0;
  gen->add_option("--mv", preset, "canonical, random-valid or from-file")
      ->check(CLI::IsMember({"canonical", "random-valid", "from-file"}));
  gen->add_option("--mv-file", mv_file, "M/V letters in edge order, for --mv from-file");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", output, "output document");

  // check
  auto* check = app.add_subcommand("check", "report local validity per interior vertex");
  std::string check_in;
  check->add_option("input", check_in, "document")->required();

  // flip
  auto* flip = app.add_subcommand("flip", "flip faces in order");
  std::string flip_in, face_list;
  bool strict = false;
  flip->add_option("input", flip_in, "document")->required();
  flip->add_option("--faces", face_list, "comma-separated face ids")->required();
  flip->add_flag("--strict", strict, "require every intermediate state to be valid");
  flip->add_option("-o,--output", output, "output document");

  // minflip
  auto* minflip = app.add_subcommand("minflip", "minimum flip sequence (square grid, Miura-ori, square twist)");
  std::string mf_family, mf_a, mf_b, coloring_out;
  minflip->add_option("--family", mf_family, "square, miura or twist (must match the documents)");
  minflip->add_option("a", mf_a, "start document")->required();
  minflip->add_option("b", mf_b, "target document")->required();
  minflip->add_option("--emit-coloring", coloring_out, "Miura: write both grid colorings");
  minflip->add_option("-o,--output", output, "output file");

  // reconfigure
  auto* reconf = app.add_subcommand("reconfigure", "triangle regions: A to B through the canonical state");
  std::string rc_family, rc_a, rc_b;
  bool exact = false;
  std::size_t max_states = 1'000'000;
  reconf->add_option("--family", rc_family, "triangle");
  reconf->add_option("a", rc_a, "start document")->required();
  reconf->add_option("b", rc_b, "target document")->required();
  reconf->add_flag("--exact", exact, "shortest sequence by breadth-first search");
  reconf->add_option("--max-states", max_states, "state budget for --exact");
  reconf->add_option("-o,--output", output, "output file");

  // flipgraph
  auto* fg = app.add_subcommand("flipgraph", "build the flip graph of a small pattern");
  PatternFlags fg_flags;
  fg_flags.add(fg, false);
  std::string fg_in, dump;
  bool full = false;
  OracleOptions oracle;
  fg->add_option("input", fg_in, "document whose pattern to use (instead of --family)");
  fg->add_flag("--full", full, "keep free boundary creases as separate states");
  fg->add_option("--max-edges", oracle.max_edges, "edge cap");
  fg->add_option("--max-nodes", oracle.max_nodes, "node cap");
  fg->add_option("--dump", dump, "write the edge list as hex node encodings");
  fg->add_option("-o,--output", output, "output file");

  // render
  auto* render = app.add_subcommand("render", "draw a document as SVG");
  std::string render_in;
  SvgOptions svg;
  render->add_option("input", render_in, "document")->required();
  render->add_flag("--labels", svg.face_labels, "label faces with their ids");
  render->add_option("--width", svg.width, "image width in pixels");
  render->add_option("-o,--output", output, "output SVG");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      CreasePattern p = gen_flags.build();
      MVAssignment mu;
      std::map<std::string, std::string> meta{{"mv", preset}};
      if (preset == "canonical") {
        mu = canonical_preset(p);
      } else if (preset == "random-valid") {
        std::mt19937_64 rng(seed);
        mu = random_valid(p, rng);
        meta["seed"] = std::to_string(seed);
      } else {
        if (mv_file.empty()) throw UsageError("--mv from-file needs --mv-file");
        try {
          mu = parse_mv_letters(io.read(mv_file), p);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      io.write(output, serialize_document(p, mu, meta));
      return kExitOk;
    }

    if (check->parsed()) {
      Document d = load(io, check_in);
      int bad = 0;
      std::ostringstream report;
      for (const auto& v : vertex_verdicts(d.mu, d.pattern)) {
        if (v.valid) continue;
        ++bad;
        report << "vertex " << v.vertex << " rule " << rule_name(v.violated_rule) << " sum " << v.maekawa_sum << "\n";
      }
      const std::size_t total = d.pattern.interior_vertices().size();
      if (bad == 0)
        report << "valid (" << total << " interior vertices)\n";
      else
        report << "invalid (" << bad << " of " << total << " interior vertices)\n";
      out << report.str();
      return bad == 0 ? kExitOk : kExitDomain;
    }

    if (flip->parsed()) {
      Document d = load(io, flip_in);
      auto faces = parse_faces(face_list);
      for (FaceId f : faces)
        if (f < 0 || static_cast<std::size_t>(f) >= d.pattern.num_faces())
          throw UsageError("face " + std::to_string(f) + " does not exist");
      MVAssignment mu;
      try {
        mu = apply_sequence(d.mu, d.pattern, faces, strict);
      } catch (const SequenceError& e) {
        throw DomainError(std::string(e.what()) + " (after " + std::to_string(e.prefix_length()) + " flips)");
      }
      io.write(output, serialize_document(d.pattern, mu, d.metadata));
      return kExitOk;
    }

    if (minflip->parsed()) {
      if (mf_a == "-" && mf_b == "-") throw UsageError("only one input can come from standard input");
      Document a = load(io, mf_a), b = load(io, mf_b);
      require_same_pattern(a, b);
      require_family(a, mf_family);
      require_valid(a, "start assignment");
      require_valid(b, "target assignment");
      FlipSequence seq;
      switch (a.pattern.family()) {
        case Family::SquareGrid: seq = min_flip_set(a.mu, b.mu, a.pattern); break;
        case Family::Miura:
          seq = min_flip_sequence(a.mu, b.mu, a.pattern);
          if (!coloring_out.empty())
            io.write(coloring_out, coloring_rows(mv_to_coloring(a.mu, a.pattern)) + "\n" +
                                       coloring_rows(mv_to_coloring(b.mu, b.pattern)));
          break;
        case Family::SquareTwist:
          try {
            seq = twist_flip_set(a.mu, b.mu, a.pattern);
          } catch (const MinFlipError& e) {
            throw DomainError(e.what());
          }
          break;
        default: throw UsageError("minflip supports square, miura and twist patterns");
      }
      if (!coloring_out.empty() && a.pattern.family() != Family::Miura)
        throw UsageError("--emit-coloring applies to Miura-ori only");
      io.write(output, sequence_text(seq) + "length " + std::to_string(seq.size()) + "\n");
      return kExitOk;
    }

    if (reconf->parsed()) {
      if (rc_a == "-" && rc_b == "-") throw UsageError("only one input can come from standard input");
      Document a = load(io, rc_a), b = load(io, rc_b);
      require_same_pattern(a, b);
      require_family(a, rc_family);
      if (a.pattern.family() != Family::TriangleRegion) throw UsageError("reconfigure supports triangle regions");
      require_valid(a, "start assignment");
      require_valid(b, "target assignment");
      const std::size_t n = a.pattern.num_faces();
      FlipSequence seq;
      try {
        seq = exact ? exact_min_flips_triangle(a.mu, b.mu, a.pattern, max_states) : reconfigure(a.mu, b.mu, a.pattern);
      } catch (const BudgetExceeded& e) {
        throw DomainError(std::string(e.what()) + " (" + std::to_string(e.explored()) + " states explored)");
      }
      std::string text = sequence_text(seq) + "length " + std::to_string(seq.size()) + "\nfaces " +
                         std::to_string(n) + "\nbudget_to_canonical " + std::to_string(2 * n) + "\nbudget_total " +
                         std::to_string(4 * n) + "\n";
      io.write(output, text);
      return kExitOk;
    }

    if (fg->parsed()) {
      std::optional<CreasePattern> p;
      if (!fg_in.empty()) {
        if (!fg_flags.family.empty()) throw UsageError("give either an input document or --family, not both");
        p = load(io, fg_in).pattern;
      } else {
        if (fg_flags.family.empty()) throw UsageError("flipgraph needs an input document or --family");
        p = fg_flags.build();
      }
      oracle.projected = !full;
      FlipGraph g;
      try {
        g = build_flip_graph(*p, oracle);
      } catch (const CapExceeded& e) {
        throw DomainError(e.what());
      }
      auto summary = components_and_diameter(g);
      int diameter = 0;
      for (int d : summary.diameters) diameter = std::max(diameter, d);
      std::ostringstream report;
      report << "mode " << (full ? "full" : "projected") << "\n";
      report << "nodes " << g.num_nodes() << "\n";
      report << "edges " << g.num_edges() << "\n";
      report << "components " << summary.count << "\n";
      report << "diameter " << diameter << "\n";
      io.write(output, report.str());
      if (!dump.empty()) {
        std::ostringstream lines;
        for (std::size_t i = 0; i < g.num_nodes(); ++i)
          for (const auto& [j, f] : g.adjacency[i])
            if (static_cast<std::size_t>(j) > i)
              lines << to_hex(g.keys[i], p->num_edges()) << " " << to_hex(g.keys[j], p->num_edges()) << " " << f
                    << "\n";
        io.write(dump, lines.str());
      }
      return kExitOk;
    }

    if (render->parsed()) {
      Document d = load(io, render_in);
      io.write(output, render_svg(d.pattern, d.mu, svg));
      return kExitOk;
    }
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n\n" << kSchemaHelp;
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace faceflip
