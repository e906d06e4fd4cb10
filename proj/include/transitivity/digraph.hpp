#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace transitivity {

using NodeId = std::int32_t;

struct Arc {
  NodeId src = 0;
  NodeId dst = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable directed graph over dense node ids 0..n-1. No self-loops, at
/// most one arc per ordered pair. Neighbor lists are sorted; once built, the
/// graph is safe to read from any number of threads.
class DiGraph {
 public:
  DiGraph() = default;

  /// Builds a graph from an arc list. Self-loops and duplicate arcs are
  /// dropped. `labels`, when non-empty, must have exactly n entries and the
  /// canonical writer assumes they contain no whitespace.
  static DiGraph from_arcs(NodeId n, std::vector<Arc> arcs,
                           std::vector<std::string> labels = {});

  NodeId node_count() const { return n_; }
  std::int64_t arc_count() const { return arc_count_; }

  bool has_arc(NodeId i, NodeId j) const;

  std::span<const NodeId> out_neighbors(NodeId i) const {
    return {out_adj_.data() + out_off_[i], out_adj_.data() + out_off_[i + 1]};
  }
  std::span<const NodeId> in_neighbors(NodeId i) const {
    return {in_adj_.data() + in_off_[i], in_adj_.data() + in_off_[i + 1]};
  }
  NodeId out_degree(NodeId i) const {
    return static_cast<NodeId>(out_off_[i + 1] - out_off_[i]);
  }
  NodeId in_degree(NodeId i) const {
    return static_cast<NodeId>(in_off_[i + 1] - in_off_[i]);
  }

  bool is_isolate(NodeId i) const {
    return out_degree(i) == 0 && in_degree(i) == 0;
  }
  NodeId isolate_count() const { return isolate_count_; }

  bool has_labels() const { return !labels_.empty(); }
  /// Label of node i; the decimal index when no labels were attached.
  std::string label(NodeId i) const;

  /// All arcs sorted by (src, dst).
  std::vector<Arc> arcs() const;

  /// Equality of node count, arc set, and effective labels (an unlabeled
  /// graph equals a graph labeled with its own decimal indices).
  friend bool operator==(const DiGraph& a, const DiGraph& b);

 private:
  NodeId n_ = 0;
  std::int64_t arc_count_ = 0;
  NodeId isolate_count_ = 0;
  std::vector<std::int64_t> out_off_{0};
  std::vector<std::int64_t> in_off_{0};
  std::vector<NodeId> out_adj_;
  std::vector<NodeId> in_adj_;
  std::vector<std::string> labels_;
};

/// Degree vectors and the dyad-level tallies every measure is built on.
/// mutual_count sums over ordered pairs, so each reciprocated dyad adds 2.
struct DegreeSummary {
  std::vector<std::int64_t> out_degrees;
  std::vector<std::int64_t> in_degrees;
  std::int64_t mutual_count = 0;
  std::int64_t edge_count = 0;
  double density = 0.0;  // edge_count / n(n-1)
};

/// Throws std::invalid_argument for graphs with fewer than 2 nodes.
DegreeSummary degree_summary(const DiGraph& g);

}  // namespace transitivity
