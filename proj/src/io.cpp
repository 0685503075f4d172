#include "faceflip/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "faceflip/flip_graph.hpp"
#include "faceflip/miura.hpp"
#include "faceflip/triangle.hpp"

namespace faceflip {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw DocumentError(DocumentErrorKind::Schema, path + ": " + msg);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing key \"" + key + "\"");
  return *it;
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) schema(path + "." + it.key(), "unexpected key");
}

int int_member(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number_integer()) schema(path + "." + key, "expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < 1 || x > 1000) schema(path + "." + key, "must lie between 1 and 1000");
  return static_cast<int>(x);
}

Degrees angle_member(const json& obj, const std::string& path) {
  const json& v = member(obj, "alpha", path);
  try {
    if (v.is_string()) return parse_angle(v.get<std::string>());
    if (v.is_number_integer()) return Degrees(v.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    schema(path + ".alpha", e.what());
  }
  schema(path + ".alpha", "expected an angle string such as \"60\" or \"135/2\"");
}

PatternParams parse_params(Family family, const json& params, const std::string& path) {
  if (!params.is_object()) schema(path, "expected an object");
  PatternParams out;
  switch (family) {
    case Family::SquareGrid:
      only_keys(params, {"m", "n"}, path);
      out.m = int_member(params, "m", path);
      out.n = int_member(params, "n", path);
      break;
    case Family::Miura:
    case Family::HuffmanGrid:
      only_keys(params, {"m", "n", "alpha"}, path);
      out.m = int_member(params, "m", path);
      out.n = int_member(params, "n", path);
      out.alpha = angle_member(params, path);
      break;
    case Family::TriangleRegion:
      if (params.contains("radius")) {
        only_keys(params, {"radius"}, path);
        out.radius = int_member(params, "radius", path);
      } else {
        only_keys(params, {"rows", "cols"}, path);
        out.rows = int_member(params, "rows", path);
        out.cols = int_member(params, "cols", path);
      }
      break;
    case Family::SquareTwist:
      only_keys(params, {"k", "l"}, path);
      out.k = int_member(params, "k", path);
      out.l = int_member(params, "l", path);
      break;
  }
  return out;
}

std::string params_json(const CreasePattern& p) {
  const auto& q = p.params();
  auto alpha = [&] { return json(format_angle(q.alpha)).dump(); };
  switch (p.family()) {
    case Family::SquareGrid: return "{\"m\": " + std::to_string(q.m) + ", \"n\": " + std::to_string(q.n) + "}";
    case Family::Miura:
    case Family::HuffmanGrid:
      return "{\"m\": " + std::to_string(q.m) + ", \"n\": " + std::to_string(q.n) + ", \"alpha\": " + alpha() + "}";
    case Family::TriangleRegion:
      if (q.radius > 0) return "{\"radius\": " + std::to_string(q.radius) + "}";
      return "{\"rows\": " + std::to_string(q.rows) + ", \"cols\": " + std::to_string(q.cols) + "}";
    case Family::SquareTwist: return "{\"k\": " + std::to_string(q.k) + ", \"l\": " + std::to_string(q.l) + "}";
  }
  return "{}";
}

std::string num(double x) {
  if (std::fabs(x) < 5e-5) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

Degrees parse_angle(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty angle");
  auto digits = [](const std::string& s) {
    if (s.empty() || s.size() > 12) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    if (!digits(a) || !digits(b) || std::stoll(b) == 0) throw std::invalid_argument("malformed angle \"" + text + "\"");
    return Degrees(std::stoll(a), std::stoll(b));
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string a = text.substr(0, dot), b = text.substr(dot + 1);
    if (!digits(a) || !digits(b) || b.size() > 9) throw std::invalid_argument("malformed angle \"" + text + "\"");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < b.size(); ++i) scale *= 10;
    return Degrees(std::stoll(a) * scale + std::stoll(b), scale);
  }
  if (!digits(text)) throw std::invalid_argument("malformed angle \"" + text + "\"");
  return Degrees(std::stoll(text));
}

std::string format_angle(const Degrees& a) {
  if (a.denominator() == 1) return std::to_string(a.numerator());
  return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
}

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) schema("$", "expected an object");
  only_keys(doc, {"format_version", "pattern", "assignment", "metadata"}, "$");
  const json& version = member(doc, "format_version", "$");
  if (!version.is_number_integer()) schema("$.format_version", "expected an integer");
  if (version.get<std::int64_t>() != kFormatVersion)
    throw DocumentError(DocumentErrorKind::UnsupportedVersion,
                        "$.format_version: unsupported version " + version.dump() + " (expected 1)");

  const json& pat = member(doc, "pattern", "$");
  if (!pat.is_object()) schema("$.pattern", "expected an object");
  only_keys(pat, {"family", "params"}, "$.pattern");
  const json& fam = member(pat, "family", "$.pattern");
  if (!fam.is_string()) schema("$.pattern.family", "expected a string");
  auto family = family_from_name(fam.get<std::string>());
  if (!family)
    throw DocumentError(DocumentErrorKind::UnknownFamily, "$.pattern.family: unknown family " + fam.dump());
  PatternParams params = parse_params(*family, member(pat, "params", "$.pattern"), "$.pattern.params");

  Document out;
  try {
    out.pattern = build_pattern(*family, params);
  } catch (const PatternError& e) {
    schema("$.pattern.params", e.what());
  }

  const json& assignment = member(doc, "assignment", "$");
  if (!assignment.is_array()) schema("$.assignment", "expected an array");
  const std::size_t edges = out.pattern.num_edges();
  std::vector<int> values(edges, 0);
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    const std::string path = "$.assignment[" + std::to_string(k) + "]";
    const json& item = assignment[k];
    if (!item.is_object()) schema(path, "expected an object");
    only_keys(item, {"edge", "mv"}, path);
    const json& e = member(item, "edge", path);
    if (!e.is_number_integer()) schema(path + ".edge", "expected an integer");
    const json& mv = member(item, "mv", path);
    if (!mv.is_string() || (mv.get<std::string>() != "M" && mv.get<std::string>() != "V"))
      schema(path + ".mv", "expected \"M\" or \"V\"");
    auto id = e.get<std::int64_t>();
    if (id < 0 || static_cast<std::size_t>(id) >= edges)
      throw DocumentError(DocumentErrorKind::EdgeCountMismatch, path + ".edge: edge " + std::to_string(id) +
                                                                    " does not exist (pattern has " +
                                                                    std::to_string(edges) + " edges)");
    if (values[id] != 0)
      throw DocumentError(DocumentErrorKind::DuplicateOrMissingEdge,
                          path + ".edge: edge " + std::to_string(id) + " appears twice");
    values[id] = mv.get<std::string>() == "M" ? kMountain : kValley;
  }
  for (std::size_t id = 0; id < edges; ++id)
    if (values[id] == 0)
      throw DocumentError(DocumentErrorKind::DuplicateOrMissingEdge,
                          "$.assignment: edge " + std::to_string(id) + " is missing");
  out.mu = MVAssignment(values);

  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    if (!meta.is_object()) schema("$.metadata", "expected an object");
    for (auto it = meta.begin(); it != meta.end(); ++it) {
      if (!it->is_string()) schema("$.metadata." + it.key(), "expected a string");
      out.metadata[it.key()] = it->get<std::string>();
    }
  }
  return out;
}

std::string serialize_document(const CreasePattern& p, const MVAssignment& mu,
                               const std::map<std::string, std::string>& metadata) {
  if (mu.size() != p.num_edges()) throw std::invalid_argument("assignment size does not match the pattern");
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": " << kFormatVersion << ",\n";
  out << "  \"pattern\": {\n";
  out << "    \"family\": " << json(family_name(p.family())).dump() << ",\n";
  out << "    \"params\": " << params_json(p) << "\n";
  out << "  },\n";
  out << "  \"assignment\": [\n";
  for (std::size_t e = 0; e < mu.size(); ++e) {
    out << "    {\"edge\": " << e << ", \"mv\": \"" << (mu[static_cast<EdgeId>(e)] == kMountain ? 'M' : 'V') << "\"}";
    out << (e + 1 < mu.size() ? ",\n" : "\n");
  }
  out << "  ]";
  if (!metadata.empty()) {
    out << ",\n  \"metadata\": {\n";
    std::size_t k = 0;
    for (const auto& [key, value] : metadata) {
      out << "    " << json(key).dump() << ": " << json(value).dump();
      out << (++k < metadata.size() ? ",\n" : "\n");
    }
    out << "  }";
  }
  out << "\n}\n";
  return out.str();
}

std::string render_svg(const CreasePattern& p, const MVAssignment& mu, const SvgOptions& opts) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& v : p.vertices()) {
    x0 = std::min(x0, v.xy[0]);
    x1 = std::max(x1, v.xy[0]);
    y0 = std::min(y0, v.xy[1]);
    y1 = std::max(y1, v.xy[1]);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double margin = 0.05 * span;
  const double w = x1 - x0 + 2 * margin, h = y1 - y0 + 2 * margin;
  const double stroke = 0.008 * span;
  auto sx = [&](double x) { return num(x - x0 + margin); };
  auto sy = [&](double y) { return num(y1 - y + margin); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opts.width) << "\" height=\""
      << num(opts.width * h / w) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
  out << "  <g fill=\"none\" stroke-linecap=\"round\">\n";
  for (const auto& e : p.edges()) {
    const auto& a = p.vertex(e.v0).xy;
    const auto& b = p.vertex(e.v1).xy;
    const bool mountain = mu[e.id] == kMountain;
    out << "    <line x1=\"" << sx(a[0]) << "\" y1=\"" << sy(a[1]) << "\" x2=\"" << sx(b[0]) << "\" y2=\"" << sy(b[1])
        << "\" class=\"" << (mountain ? "mountain" : "valley") << "\"";
    if (mountain)
      out << " stroke=\"#b22222\" stroke-width=\"" << num(3 * stroke) << "\"";
    else
      out << " stroke=\"#1f4e9c\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke) << " "
          << num(3 * stroke) << "\"";
    out << "/>\n";
  }
  out << "  </g>\n";
  if (opts.face_labels) {
    out << "  <g font-family=\"sans-serif\" font-size=\"" << num(0.04 * span)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (const auto& f : p.faces()) {
      double cx = 0, cy = 0;
      for (VertexId v : f.cycle) {
        cx += p.vertex(v).xy[0];
        cy += p.vertex(v).xy[1];
      }
      cx /= static_cast<double>(f.cycle.size());
      cy /= static_cast<double>(f.cycle.size());
      out << "    <text x=\"" << sx(cx) << "\" y=\"" << sy(cy) << "\">" << f.id << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

MVAssignment canonical_preset(const CreasePattern& p) {
  switch (p.family()) {
    case Family::TriangleRegion: return canonical_config(p);
    case Family::Miura: return classical_miura(p);
    case Family::SquareGrid: {
      // horizontal line r and the vertical creases of row band r are both (-1)^r
      MVAssignment mu(p.num_edges(), kValley);
      for (const auto& e : p.edges()) {
        auto top = std::min(p.vertex(e.v0).lattice.y, p.vertex(e.v1).lattice.y);
        int r = static_cast<int>(top.numerator() / top.denominator());
        mu.set(e.id, r % 2 == 0 ? kMountain : kValley);
      }
      return mu;
    }
    case Family::HuffmanGrid:
    case Family::SquareTwist: {
      auto mu = first_valid(p);
      if (!mu) throw std::logic_error("pattern has no valid assignment");
      return *mu;
    }
  }
  throw std::logic_error("unknown family");
}

MVAssignment parse_mv_letters(const std::string& text, const CreasePattern& p) {
  std::vector<int> values;
  for (char c : text) {
    if (c == 'M' || c == 'm')
      values.push_back(kMountain);
    else if (c == 'V' || c == 'v')
      values.push_back(kValley);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in M/V list");
  }
  if (values.size() != p.num_edges())
    throw std::invalid_argument("M/V list has " + std::to_string(values.size()) + " letters but the pattern has " +
                                std::to_string(p.num_edges()) + " edges");
  return MVAssignment(values);
}

}  // namespace faceflip
