#pragma once

// Satake diagrams: the black/white colouring of a Dynkin diagram together
// with the involution on white nodes, their validation, the catalogue of real
// forms of simple Lie algebras, and the canonical one-line text format
//
//   <TYPE><rank>[x<TYPE><rank>] black=<csv> arrows=<i:j csv>
//
// with 1-based Bourbaki indices, e.g. "A3 black=1,3 arrows=".

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satake/rootsys.hpp"

namespace satake {

struct SatakeDiagram {
  std::shared_ptr<const RootSystem> rs;
  NodeSet black;
  /// omega[i] for every white node i (fixed points explicit); -1 on black nodes.
  std::vector<int> omega;

  int rank() const { return rs->rank(); }
  bool is_black(int i) const { return black.count(i) != 0; }
  NodeSet white() const;
  /// Pairs i < j with omega(i) = j.
  std::vector<std::pair<int, int>> arrows() const;

  friend bool operator==(const SatakeDiagram& a, const SatakeDiagram& b);
};

/// Root systems are shared between diagrams; built once per component list.
std::shared_ptr<const RootSystem> shared_root_system(const std::vector<SimpleType>& types);

/// Builds a diagram from 0-based black nodes and 0-based arrow pairs; white
/// nodes not covered by an arrow are fixed by omega. No validation is done:
/// an arrow touching a black node is kept so that validate() can report it.
SatakeDiagram make_diagram(std::shared_ptr<const RootSystem> rs, const NodeSet& black,
                           const std::vector<std::pair<int, int>>& arrows = {});

struct ValidationFailure {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool ok() const { return failures.empty(); }
  bool has(std::string_view check) const;
  std::string summary() const;
};

ValidationReport validate(const SatakeDiagram& d);

/// Thrown by operations that require a valid diagram.
class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(const std::string& what) : std::runtime_error(what) {}
};

/// Throws DiagramError carrying the report summary unless validate(d).ok().
void require_valid(const SatakeDiagram& d);

struct RealFormRecord {
  std::vector<std::string> names;
  SatakeDiagram diagram;
  std::string notes;

  const std::string& name() const { return names.front(); }
  bool is_complex() const { return diagram.rs->components().size() == 2; }
};

inline constexpr int kDefaultRankBound = 8;

/// All Satake diagrams of simple real Lie algebras: classical families and
/// complex algebras viewed as real up to `rank_bound`, plus every exceptional
/// form. Deterministic order; immutable after construction.
std::vector<RealFormRecord> catalog(int rank_bound = kDefaultRankBound);

/// Lookup key: lower case with whitespace removed.
std::string normalize_name(std::string_view name);

const RealFormRecord* find_record(std::span<const RealFormRecord> records, std::string_view name);

/// Up to `limit` catalogue names closest to `name` by edit distance.
std::vector<std::string> nearest_names(std::span<const RealFormRecord> records, std::string_view name,
                                       std::size_t limit = 3);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at column " + std::to_string(position + 1)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

SatakeDiagram parse_diagram(std::string_view text);
std::string format_diagram(const SatakeDiagram& d);

/// Multi-line drawing: black nodes as "•", white as "○", bonds from the Cartan
/// entries, node labels underneath and the arrows listed as "i<->j".
std::string render_diagram(const SatakeDiagram& d, bool color = false);

}  // namespace satake
