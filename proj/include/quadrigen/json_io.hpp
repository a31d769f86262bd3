#ifndef QUADRIGEN_JSON_IO_HPP
#define QUADRIGEN_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "quadrigen/families.hpp"
#include "quadrigen/polygon.hpp"
#include "quadrigen/toric_ideal.hpp"

namespace quadrigen {

using nlohmann::json;

struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error(msg) {}
};

inline json point_to_json(const LatticePoint& p) {
    json a = json::array();
    for (Int c : p.coords()) a.push_back(c);
    return a;
}

inline json points_to_json(const std::vector<LatticePoint>& pts) {
    json a = json::array();
    for (const LatticePoint& p : pts) a.push_back(point_to_json(p));
    return a;
}

inline LatticePoint point_from_json(const json& j, int expected_dim = 0) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3))
        throw MalformedInput("point must be an array of 2 or 3 integers");
    std::vector<Int> cs;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw MalformedInput("point coordinates must be integers");
        cs.push_back(c.get<Int>());
    }
    if (expected_dim && static_cast<int>(cs.size()) != expected_dim)
        throw MalformedInput("point dimension mismatch");
    return LatticePoint::from_coords(cs);
}

// {"dim": 2|3, "vertices": [[..],..]}.  Facets are always recomputed from
// the vertex list, never trusted from the file.
inline json polytope_to_json(const LatticePolytope& p) {
    return json{{"dim", p.dim()}, {"vertices", points_to_json(p.vertices())}};
}

inline LatticePolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw MalformedInput("polytope JSON needs \"dim\" and \"vertices\"");
    int dim = 0;
    if (j.at("dim").is_number_integer()) dim = j.at("dim").get<int>();
    if (dim != 2 && dim != 3) throw MalformedInput("\"dim\" must be 2 or 3");
    if (!j.at("vertices").is_array() || j.at("vertices").empty())
        throw MalformedInput("\"vertices\" must be a nonempty array");
    std::vector<LatticePoint> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(point_from_json(v, dim));
    try {
        return convex_hull(std::move(pts));
    } catch (const DegenerateInput& e) {
        throw MalformedInput(std::string("degenerate polytope: ") + e.what());
    } catch (const CoordinateOutOfRange& e) {
        throw MalformedInput(e.what());
    }
}

// Family specs mirror the parameter types:
//   {"family":"case1","k":3,"cuts":[0,1,0,1]}
//   {"family":"case2","base_scale":2,"edges":[1,3,3],"cuts":[1,0]}
//   {"family":"case3","f0":{polytope},"f1":{polytope}}
inline json family_spec_to_json(const FamilySpec& spec) {
    json j;
    if (const auto* c1 = std::get_if<Case1Spec>(&spec)) {
        j["family"] = "case1";
        j["k"] = c1->k;
        j["cuts"] = json::array({c1->cuts[0], c1->cuts[1], c1->cuts[2], c1->cuts[3]});
    } else if (const auto* c2 = std::get_if<Case2Spec>(&spec)) {
        j["family"] = "case2";
        j["base_scale"] = c2->base_scale;
        j["edges"] = json::array({c2->lengths[0], c2->lengths[1], c2->lengths[2]});
        j["cuts"] = json::array({c2->cuts[0], c2->cuts[1]});
    } else if (const auto* c3 = std::get_if<Case3Spec>(&spec)) {
        j["family"] = "case3";
        j["f0"] = polytope_to_json(c3->f0);
        j["f1"] = polytope_to_json(c3->f1);
    }
    return j;
}

inline FamilySpec family_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw MalformedInput("family spec JSON needs a \"family\" tag");
    const std::string fam = j.at("family").get<std::string>();
    auto get_int = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_number_integer())
            throw MalformedInput(std::string("family spec needs integer \"") + key + "\"");
        return j.at(key).get<Int>();
    };
    if (fam == "case1") {
        Case1Spec spec;
        spec.k = get_int("k");
        if (j.contains("cuts")) {
            const auto& cuts = j.at("cuts");
            if (!cuts.is_array() || cuts.size() > 4)
                throw MalformedInput("case1 \"cuts\" must be an array of at most 4 integers");
            for (std::size_t i = 0; i < cuts.size(); ++i) spec.cuts[i] = cuts[i].get<Int>();
        }
        return spec;
    }
    if (fam == "case2") {
        Case2Spec spec;
        spec.base_scale = get_int("base_scale");
        if (!j.contains("edges") || !j.at("edges").is_array() || j.at("edges").size() != 3)
            throw MalformedInput("case2 \"edges\" must be an array of 3 integers");
        for (std::size_t i = 0; i < 3; ++i) spec.lengths[i] = j.at("edges")[i].get<Int>();
        if (j.contains("cuts")) {
            const auto& cuts = j.at("cuts");
            if (!cuts.is_array() || cuts.size() > 2)
                throw MalformedInput("case2 \"cuts\" must be an array of at most 2 integers");
            for (std::size_t i = 0; i < cuts.size(); ++i) spec.cuts[i] = cuts[i].get<Int>();
        }
        return spec;
    }
    if (fam == "case3") {
        if (!j.contains("f0") || !j.contains("f1"))
            throw MalformedInput("case3 needs \"f0\" and \"f1\" polygons");
        Case3Spec spec{polytope_from_json(j.at("f0")), polytope_from_json(j.at("f1"))};
        if (spec.f0.dim() != 2 || spec.f1.dim() != 2)
            throw MalformedInput("case3 slices must be 2D polytopes");
        return spec;
    }
    throw MalformedInput("unknown family \"" + fam + "\"");
}

// {"vertex": [..], "witnesses": [{"point": [..], "pair": [[..],[..]]}, ...]}
inline json certificate_to_json(const DecompositionCertificate& cert) {
    json ws = json::array();
    for (const Witness& w : cert.witnesses)
        ws.push_back(json{{"point", point_to_json(w.point)},
                          {"pair", json::array({point_to_json(w.first), point_to_json(w.second)})}});
    return json{{"vertex", point_to_json(cert.vertex)}, {"witnesses", ws}};
}

inline json oracle_report_to_json(const FiberGraphReport& rep) {
    json degrees = json::array();
    for (const auto& d : rep.per_degree)
        degrees.push_back(json{{"degree", d.degree},
                               {"fibers", d.fiber_count},
                               {"multisets", d.multiset_count},
                               {"disconnected_fibers", d.disconnected_fibers},
                               {"connected", d.connected}});
    json j{{"degree_bound", rep.degree_bound},
           {"all_connected", rep.all_connected},
           {"per_degree", degrees}};
    if (rep.first_failure) {
        j["first_failure"] = json{{"degree", rep.first_failure->degree},
                                  {"fiber_sum", point_to_json(rep.first_failure->fiber_sum)},
                                  {"components",
                                   json::array({points_to_json(rep.first_failure->component_a),
                                                points_to_json(rep.first_failure->component_b)})}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

inline json smoothness_to_json(const SmoothnessReport& rep) {
    json vs = json::array();
    for (const auto& v : rep.per_vertex)
        vs.push_back(json{{"vertex", point_to_json(v.vertex)},
                          {"smooth", v.smooth},
                          {"edge_count", v.edge_count},
                          {"cone_determinant", v.cone_determinant}});
    return json{{"all_smooth", rep.all_smooth}, {"vertices", vs}};
}

inline json koelman_to_json(const KoelmanVerdict& v) {
    return json{{"normally_generated", v.normally_generated},
                {"needs_cubics", v.needs_cubics},
                {"interior_count", v.interior_count},
                {"boundary_count", v.boundary_count}};
}

inline json fujita_to_json(const FujitaCounts& fc) {
    return json{{"chi", fc.chi},
                {"genus", fc.genus},
                {"degree", fc.degree},
                {"quadric_by_fujita", fc.quadric_by_fujita}};
}

inline json classification_to_json(const ClassificationResult& r) {
    json j;
    switch (r.family) {
        case Family::case1: j["family"] = "case1"; break;
        case Family::case2: j["family"] = "case2"; break;
        case Family::case3: j["family"] = "case3"; break;
        default: j["family"] = "unknown"; break;
    }
    if (r.case1) j["parameters"] = family_spec_to_json(*r.case1);
    else if (r.case2) j["parameters"] = family_spec_to_json(*r.case2);
    else if (r.case3) j["parameters"] = family_spec_to_json(*r.case3);
    else j["parameters"] = nullptr;
    j["adjoint_vanishes"] = r.adjoint_vanishes;
    return j;
}

inline json map_to_json(const AffineUnimodularMap& t) {
    json rows = json::array();
    for (int i = 0; i < t.dim(); ++i) rows.push_back(point_to_json(t.linear().row(i)));
    return json{{"linear", rows}, {"translation", point_to_json(t.translation())}};
}

inline json diamond_to_json(const DiamondSearchResult& r) {
    json corners = json::array();
    for (const LatticePoint& c : r.diamond.corners) corners.push_back(point_to_json(c));
    return json{{"case", r.case_used},
                {"axes_swapped", r.axes_swapped},
                {"to_normal_frame", map_to_json(r.to_normal_frame)},
                {"normalized_vertices", points_to_json(r.normalized.vertices())},
                {"diamond",
                 json{{"corners", corners},
                      {"distinguished_vertex", point_to_json(r.diamond.distinguished_vertex)},
                      {"opposite", point_to_json(r.diamond.opposite)}}},
                {"opposite_interior", r.opposite_interior}};
}

inline json presentation_to_json(const QuadraticPresentation& pres) {
    json bs = json::array();
    for (const QuadraticBinomial& b : pres.binomials)
        bs.push_back(json{{"chart", b.chart}, {"i", b.i}, {"k", b.k}, {"l", b.l}});
    return json{{"point_order", points_to_json(pres.point_order)}, {"binomials", bs}};
}

// FNV-1a over a canonical serialization of the vertex list.
inline std::string input_digest(const LatticePolytope& p) {
    std::string s = std::to_string(p.dim());
    std::vector<LatticePoint> vs = p.vertices();
    std::sort(vs.begin(), vs.end());
    for (const LatticePoint& v : vs) s += ";" + v.str();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

}  // namespace quadrigen

#endif
