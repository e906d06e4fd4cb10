#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "transitivity/digraph.hpp"

namespace transitivity {

struct IngestOptions {
  bool symmetrize = false;        // add both directions for every kept edge
  double threshold = 0.0;         // keep entries with weight strictly above
  std::string comment_prefix = "#";
  bool node_directives = true;    // honor "# node <label>" comment lines
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::int64_t line);
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

struct IngestResult {
  DiGraph graph;
  std::int64_t self_loops_dropped = 0;
};

/// Edge-list reader. Lines are "src dst" or "src dst weight", whitespace- or
/// comma-delimited; node names are arbitrary strings and get dense indices in
/// order of first appearance. Weightless lines count as weight 1; an arc is
/// kept iff its weight exceeds options.threshold. Lines starting with the
/// comment prefix are skipped, except "# node <label>" which registers a node
/// (that is how the canonical writer round-trips isolates). Self-loop lines
/// are dropped and counted. Throws ParseError on malformed or empty input.
IngestResult parse_edge_list(std::istream& in, const IngestOptions& options = {});
IngestResult parse_edge_list_file(const std::string& path,
                                  const IngestOptions& options = {});

/// Adjacency-matrix reader: n whitespace-delimited numeric rows of n entries
/// each. The diagonal is ignored; x_ij = 1 iff entry > threshold. Ragged or
/// non-square input throws ParseError.
IngestResult parse_adjacency_matrix(std::istream& in,
                                    const IngestOptions& options = {});
IngestResult parse_adjacency_matrix_file(const std::string& path,
                                         const IngestOptions& options = {});

/// Canonical writer: provenance comments, one "# node <label>" per node in
/// index order, then "src dst" label pairs sorted by (src, dst) index.
/// parse_edge_list() reproduces the graph exactly, isolates included.
void write_edge_list(const DiGraph& g, std::ostream& out,
                     std::span<const std::string> provenance = {});
std::string to_edge_list(const DiGraph& g,
                         std::span<const std::string> provenance = {});

}  // namespace transitivity
