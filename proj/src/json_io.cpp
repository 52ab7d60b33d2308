#include "hodgelab/json_io.hpp"

namespace hodgelab {

namespace {

std::vector<long> long_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    std::vector<long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(std::string(what) + " must contain integers");
        out.push_back(v.get<long>());
    }
    return out;
}

Json char_key(const Character& chi) {
    return Json(chi.residues);
}

}  // namespace

Json group_to_json(const FiniteAbelianGroup& g) {
    return Json{{"factors", g.factor_orders}};
}

FiniteAbelianGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("factors"))
        throw InputError("group must be an object with a \"factors\" array");
    return make_group(long_array(j.at("factors"), "group factors"));
}

Json matrix_to_json(const GroupAutomorphism& phi) {
    Json rows = Json::array();
    for (const auto& row : phi.matrix) rows.push_back(row);
    return rows;
}

GroupAutomorphism matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("automorphism must be a row-major integer matrix");
    GroupAutomorphism phi;
    for (const auto& row : j) phi.matrix.push_back(long_array(row, "automorphism row"));
    return phi;
}

Json cover_spec_to_json(const CoverSpec& spec) {
    Json branch = Json::array();
    for (const auto& bp : spec.branch) {
        Json b{{"label", bp.label}, {"monodromy", bp.monodromy.residues}};
        if (bp.coordinate) b["coordinate"] = point_to_string(*bp.coordinate);
        branch.push_back(std::move(b));
    }
    return Json{{"group", group_to_json(spec.group)},
                {"quotient_genus", spec.quotient_genus},
                {"branch", std::move(branch)}};
}

CoverSpec cover_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("cover spec must be a JSON object");
    CoverSpec spec;
    spec.group = group_from_json(j.at("group"));
    if (!j.contains("quotient_genus") || !j.at("quotient_genus").is_number_integer())
        throw InputError("cover spec needs an integer \"quotient_genus\"");
    spec.quotient_genus = j.at("quotient_genus").get<long>();
    if (j.contains("branch")) {
        if (!j.at("branch").is_array()) throw InputError("\"branch\" must be an array");
        long index = 0;
        for (const auto& b : j.at("branch")) {
            BranchPoint bp;
            bp.label = b.contains("label") ? b.at("label").get<std::string>()
                                           : "P" + std::to_string(++index);
            bp.monodromy = GroupElement{long_array(b.at("monodromy"), "monodromy")};
            if (b.contains("coordinate") && !b.at("coordinate").is_null())
                bp.coordinate = parse_point(b.at("coordinate").get<std::string>());
            spec.branch.push_back(std::move(bp));
        }
    }
    return validate_spec(std::move(spec));
}

Json product_spec_to_json(const ProductSurfaceSpec& ps) {
    Json j{{"spec1", cover_spec_to_json(ps.spec1)}, {"spec2", cover_spec_to_json(ps.spec2)}};
    j["twist"] = ps.twist ? matrix_to_json(*ps.twist) : Json(nullptr);
    return j;
}

ProductSurfaceSpec product_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("product spec must be a JSON object");
    ProductSurfaceSpec ps;
    ps.spec1 = cover_spec_from_json(j.at("spec1"));
    ps.spec2 = cover_spec_from_json(j.at("spec2"));
    if (j.contains("twist") && !j.at("twist").is_null())
        ps.twist = matrix_from_json(j.at("twist"));
    return validate_product_spec(std::move(ps));
}

Json eigentable_to_json(const EigenTable& t) {
    Json dims = Json::array();
    for (const auto& [chi, d] : t.dims) dims.push_back(Json{{"char", char_key(chi)}, {"dim", d}});
    return Json{{"group", group_to_json(t.group)}, {"genus", t.genus}, {"dims", std::move(dims)}};
}

Json building_data_to_json(const BuildingData& bd) {
    Json l = Json::array();
    for (const auto& [chi, deg] : bd.l_degrees)
        l.push_back(Json{{"char", char_key(chi)}, {"degree", deg}});
    Json d = Json::array();
    for (const auto& [g, deg] : bd.d_degrees)
        d.push_back(Json{{"inertia_generator", g.residues}, {"degree", deg}});
    return Json{{"group", group_to_json(bd.group)}, {"L", std::move(l)}, {"D", std::move(d)}};
}

Json pardini_result_to_json(const PardiniResult& r) {
    Json v = Json::array();
    for (const auto& viol : r.violations)
        v.push_back(Json{{"chi", char_key(viol.chi)},
                         {"chi2", char_key(viol.chi2)},
                         {"lhs", viol.lhs},
                         {"rhs", viol.rhs}});
    return Json{{"ok", r.ok}, {"violations", std::move(v)}};
}

Json hodge_to_json(const HodgeSummary& s) {
    return Json{{"q", s.q},           {"p_g", s.p_g},   {"h11", s.h11},
                {"t1", s.t1},         {"t2", s.t2},     {"h1_theta", s.h1_theta},
                {"euler", s.euler},   {"chi_O", s.chi_o}};
}

namespace {

Json factor_to_json(const FactorReport& f) {
    Json adm = Json::array();
    for (const auto& chi : f.admissible) adm.push_back(char_key(chi));
    Json j{{"admissible", std::move(adm)},
           {"image_bound", f.image_bound},
           {"target", f.target},
           {"verdict", to_string(f.verdict)}};
    j["exact_rank"] = f.exact_rank ? Json(*f.exact_rank) : Json(nullptr);
    return j;
}

Json dphi1_to_json(const DPhi1Factor& f) {
    return Json{{"source", f.source}, {"target", f.target}, {"verdict", to_string(f.verdict)}};
}

}  // namespace

Json torelli_report_to_json(const TorelliReport& r) {
    return Json{{"factor1", factor_to_json(r.factor1)},
                {"factor2", factor_to_json(r.factor2)},
                {"kernel_lower_bound", r.kernel_lower_bound},
                {"dphi1", Json{{"factor1", dphi1_to_json(r.dphi1_factor1)},
                               {"factor2", dphi1_to_json(r.dphi1_factor2)}}},
                {"warnings", r.warnings}};
}

Json hypothesis_to_json(const HypothesisFactor& f1, const HypothesisFactor& f2) {
    auto one = [](const HypothesisFactor& f) {
        Json j{{"status", to_string(f.status)}, {"reason", f.reason}};
        if (f.witness) {
            Json gens = Json::array();
            for (const auto& g : f.witness->generators) gens.push_back(g.residues);
            j["witness_generators"] = std::move(gens);
            j["witness_order"] = f.witness->order();
        }
        return j;
    };
    return Json{{"factor1", one(f1)}, {"factor2", one(f2)}};
}

Json sweep_report_to_json(const SweepReport& r) {
    Json v = Json::array();
    for (const auto& viol : r.violations)
        v.push_back(Json{{"d", viol.d}, {"r", viol.r}, {"m", viol.m}, {"count_ones", viol.count_ones}});
    return Json{{"checked", r.checked}, {"violations", std::move(v)}, {"wall_time_ms", r.wall_time_ms}};
}

Json zero_link_to_json(const ZeroLinkReport& r) {
    Json j{{"d", r.d},
           {"zero_eigenspace_count", r.zero_eigenspace_count},
           {"lambda_one_count", r.lambda_one_count},
           {"link_holds", r.link_holds},
           {"notes", r.notes}};
    j["bound_holds"] = r.bound_holds ? Json(*r.bound_holds) : Json(nullptr);
    return j;
}

Json function_basis_to_json(const FunctionBasis& b) {
    auto poly_to_json = [](const Poly& p) {
        Json num = Json::array(), den = Json::array();
        for (const auto& c : p.c) {
            num.push_back(c.get_num().get_str());
            den.push_back(c.get_den().get_str());
        }
        return Json{{"num", std::move(num)}, {"den", std::move(den)}};
    };
    Json elems = Json::array();
    for (const auto& f : b.elements)
        elems.push_back(Json{{"numerator", poly_to_json(f.num)}, {"denominator", poly_to_json(f.den)}});
    Json bound = Json::array();
    for (const auto& [p, m] : b.bound.coeff)
        bound.push_back(Json{{"point", point_to_string(p)}, {"mult", m}});
    return Json{{"elements", std::move(elems)}, {"bound", std::move(bound)}};
}

}  // namespace hodgelab
