#pragma once

#include <optional>
#include <string>

#include "hca/arc_model.hpp"
#include "hca/essentialize.hpp"
#include "hca/forbidden.hpp"
#include "hca/graph.hpp"

namespace hca {

/// Answer to "is G HCA?" with something a third party can check: a Helly
/// model, a named (or, failing a name, minimal) forbidden induced
/// subgraph, or an essential obstacle enumeration.
struct Certificate {
  enum Status { Helly, NotHca };
  Status status = Helly;
  std::optional<ArcModel> model;
  std::optional<ForbiddenCopy> forbidden;  // name "unnamed" allowed, then copy is empty
  std::optional<EssentialResult> obstacle;
};

/// Name of the check that `check_certificate` runs for c.
std::string checker_name(const Certificate& c);

/// Re-verifies c against g from scratch. On failure, *why says what broke.
bool check_certificate(const Graph& g, const Certificate& c, std::string* why = nullptr);

/// recognize_hca; on failure minimal_non_hca, then (up to 12 vertices)
/// find_obstacle_enumeration + essentialize, else a name by isomorphism,
/// else "unnamed" with the minimal vertex set. Throws InternalError if
/// the result fails check_certificate.
Certificate certify_hca(const Graph& g);

/// JSON with keys status, checker, and model / forbidden / obstacle.
std::string certificate_to_json(const Certificate& c, int indent = 2);
Certificate certificate_from_json(const std::string& text);

}  // namespace hca
