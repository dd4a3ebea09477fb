#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hca/graph.hpp"

namespace hca {

/// Closed clockwise arc start..end on a circle of P positions; wraps when
/// end < start. `full` covers the whole circle and ignores start/end.
struct Arc {
  int start = 0;
  int end = 0;
  bool full = false;

  bool operator==(const Arc&) const = default;
};

/// Arcs over the discrete circle 0..circle_size-1; arc i is the arc of
/// vertex i.
struct ArcModel {
  int circle_size = 1;
  std::vector<Arc> arcs;

  int size() const { return static_cast<int>(arcs.size()); }
  bool operator==(const ArcModel&) const = default;
};

/// Throws InputError unless P >= 1, every endpoint lies in 0..P-1 and
/// there are at most 64 arcs.
void check_model(const ArcModel& m);

bool arc_contains(const ArcModel& m, int arc, int position);

/// For every position, the set of arcs containing it.
std::vector<VertexSet> position_cover(const ArcModel& m);

Graph intersection_graph(const ArcModel& m);

struct HellyReport {
  bool is_helly = true;
  /// Maximal cliques of the intersection graph, sorted by lex_less.
  std::vector<VertexSet> cliques;
  /// Smallest position common to all arcs of cliques[i], if any.
  std::vector<std::optional<int>> clique_points;
  /// First clique without a clique point.
  std::optional<VertexSet> violator;
};

HellyReport helly_report(const ArcModel& m);

/// True iff no arc's position set is a strict subset of another's.
bool is_proper(const ArcModel& m);

/// Re-embeds the model on 2n positions with pairwise distinct extremes.
/// Every used position becomes a block holding its starts (in id order)
/// followed by its ends (in id order); unused positions vanish. Throws
/// InputError on full arcs.
ArcModel normalize_extremes(const ArcModel& m);

/// Arcs of S, renumbered in increasing id order.
ArcModel submodel(const ArcModel& m, VertexSet s);

ArcModel parse_model(std::istream& in);
ArcModel parse_model_string(const std::string& text);
ArcModel read_model_file(const std::string& path);
std::string format_model(const ArcModel& m);

}  // namespace hca
