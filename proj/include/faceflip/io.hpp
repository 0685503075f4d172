#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "faceflip/assignment.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

constexpr int kFormatVersion = 1;

enum class DocumentErrorKind { Schema, UnknownFamily, EdgeCountMismatch, DuplicateOrMissingEdge, UnsupportedVersion };

class DocumentError : public std::runtime_error {
 public:
  DocumentError(DocumentErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  DocumentErrorKind kind() const { return kind_; }

 private:
  DocumentErrorKind kind_;
};

struct Document {
  CreasePattern pattern;
  MVAssignment mu;
  /// Free-form string metadata, written in key order.
  std::map<std::string, std::string> metadata;
};

/// Parses the JSON document format. Error messages start with the JSON path
/// of the offending value, e.g. "$.assignment[3].mv: ...".
Document parse_document(const std::string& text);

/// Deterministic JSON: fixed key order, edges ascending, newline-terminated.
std::string serialize_document(const CreasePattern& p, const MVAssignment& mu,
                               const std::map<std::string, std::string>& metadata = {});

/// Parses "60", "135/2" or "22.5" style angles into exact degrees.
Degrees parse_angle(const std::string& text);
std::string format_angle(const Degrees& a);

struct SvgOptions {
  bool face_labels = false;
  double width = 600.0;  // pixels; height follows the aspect ratio
};

/// Mountains solid and bold, valleys dashed; viewBox with a 5% margin,
/// y pointing up in pattern coordinates.
std::string render_svg(const CreasePattern& p, const MVAssignment& mu, const SvgOptions& opts = {});

/// Family preset: canonical configuration for triangle regions, the
/// classical fold for Miura-ori, alternating rows for square grids, and the
/// first enumerated valid state for Huffman grids and square twists.
MVAssignment canonical_preset(const CreasePattern& p);

/// Parses M/V letters (whitespace ignored) in edge-id order.
MVAssignment parse_mv_letters(const std::string& text, const CreasePattern& p);

}  // namespace faceflip
