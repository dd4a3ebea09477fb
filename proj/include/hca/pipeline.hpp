#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hca/catalog.hpp"
#include "hca/forbidden.hpp"
#include "hca/graph.hpp"

namespace hca {

/// Family of a minimal non-concave-round graph.
struct FamilyTag {
  enum Kind { Net, TentStar, CoH3, CkStar, CoC2k, CoOddCStar, CoB, Unknown };
  Kind kind = Unknown;
  int param = 0;      // k for CkStar, CoC2k, CoOddCStar
  std::string figure;  // figure name for CoB
};

std::string to_string(const FamilyTag& t);

/// Size-matched isomorphism tests against net, tent*, co-H3, C_k*,
/// co-C_{2k}, co-C_{2k+1}*, then transcribed complements of the B-graphs
/// (figure names starting with "B") when `figures` has them.
FamilyTag classify_concave_forbidden(const Graph& h, const FigureTable* figures = nullptr);

struct PipelineResult {
  ForbiddenCopy forbidden;  // in ids of the input graph
  bool concave_round = false;
  std::optional<FamilyTag> tag;  // set on the non-concave-round branch
};

/// Names allowed as pipeline output for an input on n vertices.
std::vector<std::string> pipeline_whitelist(int n);

/// For a non-HCA graph: an induced claw, 5-wheel, member of OBST8, co-C6,
/// tent*, C_k* (k >= 4), co-P7 or co-3K2, verified before return. Throws
/// InputError if G is HCA.
PipelineResult quasi_line_pipeline(const Graph& g, const FigureTable* figures = nullptr);

enum class Profile { QuasiLineHCA, ProperAndHelly };

struct ProfileResult {
  bool ok = true;
  std::optional<ForbiddenCopy> witness;
};

/// The forbidden list of the profile, with C_k* instantiated for
/// 4 <= k <= n - 1. ProperAndHelly adds co-H2 and co-H4, which need the
/// figure transcriptions "H2" and "H4".
std::vector<std::string> profile_names(Profile p, int n);

ProfileResult forbidden_profile_check(const Graph& g, Profile p, const FigureTable* figures = nullptr);

}  // namespace hca
