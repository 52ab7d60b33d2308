#pragma once

#include <json.hpp>

#include "hodgelab/covers.hpp"
#include "hodgelab/groups.hpp"
#include "hodgelab/lemma46.hpp"
#include "hodgelab/rrspace.hpp"
#include "hodgelab/torelli.hpp"

namespace hodgelab {

using Json = nlohmann::json;

Json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

Json matrix_to_json(const GroupAutomorphism& phi);
GroupAutomorphism matrix_from_json(const Json& j);

Json cover_spec_to_json(const CoverSpec& spec);
CoverSpec cover_spec_from_json(const Json& j);

Json product_spec_to_json(const ProductSurfaceSpec& ps);
ProductSurfaceSpec product_spec_from_json(const Json& j);

Json eigentable_to_json(const EigenTable& t);
Json building_data_to_json(const BuildingData& bd);
Json pardini_result_to_json(const PardiniResult& r);
Json hodge_to_json(const HodgeSummary& s);
Json torelli_report_to_json(const TorelliReport& r);
Json hypothesis_to_json(const HypothesisFactor& f1, const HypothesisFactor& f2);
Json sweep_report_to_json(const SweepReport& r);
Json zero_link_to_json(const ZeroLinkReport& r);
Json function_basis_to_json(const FunctionBasis& b);

}  // namespace hodgelab
