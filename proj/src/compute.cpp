#include "paperlab/compute.hpp"

#include "paperlab/groebner.hpp"
#include "paperlab/structure.hpp"

namespace paperlab {

using nlohmann::json;

namespace {

json ring_json(const Ring& r) {
  return {{"p", r.field().characteristic()},
          {"variables", r.vars().names},
          {"weights", r.vars().weights},
          {"order", r.order().name()}};
}

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const Polynomial& f : polys) out.push_back(format_polynomial(f));
  return out;
}

json groebner_json(const ComputeInput& in) {
  const GroebnerBasis gb = buchberger(in.ring, in.polynomials);
  json leads = json::array();
  for (const Polynomial& f : gb.polys) leads.push_back(in.ring->format_monomial(f.lead_monomial()));
  return {{"basis", strings(gb.polys)},
          {"leading_monomials", leads},
          {"stats",
           {{"pairs_considered", gb.stats.pairs_considered},
            {"pairs_pruned", gb.stats.pairs_pruned},
            {"zero_reductions", gb.stats.zero_reductions}}}};
}

json depth_json(const ComputeInput& in) {
  const PresentedRing pr = PresentedRing::quotient(Ideal(in.ring, in.polynomials));
  const FreeResolution res = free_resolution(pr);
  const RingVerdict v = depth_report(pr, res);
  json betti = json::array();
  for (const auto& [key, value] : res.betti.entries) betti.push_back({key.first, key.second, value});
  return {{"num_vars", v.num_vars},
          {"projective_dimension", v.projective_dimension},
          {"dimension", v.dimension},
          {"depth", v.depth},
          {"cohen_macaulay", v.is_cohen_macaulay},
          {"cm_defect", v.cm_defect},
          {"euler_check", v.euler_check},
          {"betti", betti},
          {"betti_table", res.betti.to_string()}};
}

json presentation_json(const ComputeInput& in) {
  const PresentedRing pr = presentation_ideal(in.polynomials);
  return {{"ring", ring_json(*pr.ring())},
          {"generators", strings(pr.generators())},
          {"relations", strings(pr.ideal().basis())},
          {"is_polynomial_ring", pr.ideal().is_zero_ideal()}};
}

}  // namespace

ComputeInput parse_compute_input(const json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::kParse, "input must be a JSON object");
    const auto p = doc.at("p").get<std::uint32_t>();
    if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
    VarSpec vars = VarSpec::uniform(doc.at("variables").get<std::vector<std::string>>());
    if (doc.contains("weights")) {
      vars.weights = doc.at("weights").get<std::vector<std::uint32_t>>();
      if (vars.weights.size() != vars.names.size()) {
        throw Error(ErrorCode::kInvalidArgument, "weights and variables differ in length");
      }
    }
    const MonomialOrder order =
        doc.contains("order") ? MonomialOrder::parse(doc.at("order").get<std::string>()) : MonomialOrder::grevlex();
    ComputeInput out;
    out.ring = Ring::make(PrimeField(p), std::move(vars), order);
    for (const std::string& text : doc.at("polynomials").get<std::vector<std::string>>()) {
      out.polynomials.push_back(parse_polynomial(text, out.ring));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

ComputeInput parse_compute_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return parse_compute_input(doc);
}

std::optional<ComputeOp> parse_compute_op(std::string_view name) {
  if (name == "groebner") return ComputeOp::kGroebner;
  if (name == "depth") return ComputeOp::kDepth;
  if (name == "presentation") return ComputeOp::kPresentation;
  return std::nullopt;
}

json run_compute(ComputeOp op, const ComputeInput& input) {
  json out = {{"ring", ring_json(*input.ring)}, {"input", strings(input.polynomials)}};
  switch (op) {
    case ComputeOp::kGroebner:
      out["operation"] = "groebner";
      out["result"] = groebner_json(input);
      break;
    case ComputeOp::kDepth:
      out["operation"] = "depth";
      out["result"] = depth_json(input);
      break;
    case ComputeOp::kPresentation:
      out["operation"] = "presentation";
      out["result"] = presentation_json(input);
      break;
  }
  return out;
}

}  // namespace paperlab
