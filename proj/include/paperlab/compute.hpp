#pragma once

// Ad-hoc queries on user-supplied rings and polynomials.

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "paperlab/polyring.hpp"

namespace paperlab {

/// {"p": prime, "variables": [names], "weights": [ints] (optional, default 1),
///  "polynomials": [strings], "order": "grevlex" | "lex" | "block:<k>" (optional)}
struct ComputeInput {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
};

/// Throws Error(kParse) on malformed documents and Error(kInvalidArgument)
/// when p is not prime or the weights do not match the variables.
ComputeInput parse_compute_input(const nlohmann::json& doc);
ComputeInput parse_compute_text(std::string_view text);

enum class ComputeOp { kGroebner, kDepth, kPresentation };

std::optional<ComputeOp> parse_compute_op(std::string_view name);

/// groebner: reduced basis of the ideal in the given order.
/// depth: depth report and Betti table of ring / (polynomials); homogeneous input only.
/// presentation: relations among the polynomials as subalgebra generators.
nlohmann::json run_compute(ComputeOp op, const ComputeInput& input);

}  // namespace paperlab
