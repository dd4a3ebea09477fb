#pragma once

#include <map>
#include <string>
#include <vector>

#include "hca/graph.hpp"

namespace hca {

/// Catalog identifier plus integer parameters. Names accepted by
/// catalog_graph:
///   Claw, Wheel(k), Pn(n), Cn(n), Kn(n), Kpq(p,q), CompleteSun(k),
///   Domino, G3, CoC6, CoC5plusK2, CoZ, CoC7Star, Net, Tent, TentStar,
///   C4Star, K23, Co3K2, CoP7, Co2P4, Co2C5, CkStar(k), CoCn(n),
///   CoOddCStar(k) for the complement of C_{2k+1} + K1.
/// Anything else is looked up in the figure table.
struct NamedGraph {
  std::string name;
  std::vector<int> params;
};

/// Graphs transcribed from figures, keyed by name.
using FigureTable = std::map<std::string, Graph>;

/// Parses a figure file: blocks introduced by `figure <name> <n>` followed
/// by `u v` edge lines; `#` comments.
FigureTable load_figures(const std::string& path);

/// Throws UntranscribedFigureGraph for figure-only names missing from
/// `figures`, InputError for bad parameters.
Graph catalog_graph(const NamedGraph& name, const FigureTable* figures = nullptr);

Graph claw();
Graph wheel(int k);  // C_k plus a universal vertex
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
/// w_1..w_k (ids 0..k-1) a clique, v_i (id k+i-1) adjacent to w_{i-1}, w_i.
Graph complete_sun(int k);

/// Pseudo-domino on a1,a2,b1,b2,c1,c2 = 0..5 with no diagonal edge and
/// the given number of handle edges (0: domino, 1: G3, 2: co-C6).
Graph pseudo_domino(int handles);

/// Base graph of the co-C7* multiples lemma: V_1..V_7 = 0..6, U = 7 and,
/// when with_w, W = 8 with j = 1.
Graph co_c7_base(bool with_w);

/// Display names used in certificates.
namespace names {
inline constexpr const char* kClaw = "claw";
inline constexpr const char* kFiveWheel = "5-wheel";
inline constexpr const char* kC4Star = "C4*";
inline constexpr const char* kK23 = "K23";
inline constexpr const char* kDomino = "domino";
inline constexpr const char* kG3 = "G3";
inline constexpr const char* kCoC6 = "co-C6";
inline constexpr const char* kCoC5K2 = "co-(C5+K2)";
inline constexpr const char* kCo3K2 = "co-3K2";
inline constexpr const char* kCoP7 = "co-P7";
inline constexpr const char* kNet = "net";
inline constexpr const char* kCo2P4 = "co-2P4";
inline constexpr const char* kCoF1 = "co-F1";
inline constexpr const char* kCoF2 = "co-F2";
inline constexpr const char* kCoH3 = "co-H3";
inline constexpr const char* kCoF8 = "co-F8";
inline constexpr const char* kTentStar = "tent*";
inline constexpr const char* kCoC7Star = "co-C7*";
}  // namespace names

/// Display name of C_k + K1, e.g. "C5*".
std::string ck_star_name(int k);

/// One representative per isomorphism class on n vertices, sorted by
/// canonical form. Throws BoundExceeded for n > 7.
std::vector<Graph> enumerate_all_graphs(int n);

}  // namespace hca
