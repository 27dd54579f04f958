#pragma once

// JSON (de)serialization for every externally visible type: divisor classes,
// point configurations, reduction certificates, polynomials, quadratic forms,
// (2,2) surfaces, point clusters, and the analysis/ampleness reports.  The
// machine format is documented in docs/formats.md; every serializer here
// round-trips through the matching parser.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include <blowup7/ampleness.hpp>
#include <blowup7/cremona.hpp>
#include <blowup7/divisor_class.hpp>
#include <blowup7/polynomial.hpp>
#include <blowup7/rational.hpp>
#include <blowup7/surface22.hpp>
#include <blowup7/ternary_form.hpp>

namespace blowup7 {

/// Key-order-preserving JSON: serialized payloads keep the documented field
/// order, which keeps `verify-paper` output byte-stable across runs.
using Json = nlohmann::ordered_json;

// --- divisor classes -------------------------------------------------------

inline Json to_json(const DivisorClass& d)
{
    Json j;
    j["a"] = d.h;
    j["b"] = d.b;
    return j;
}

/// Accepts either the object form {"a": 4, "b": [2,1,...]} or the compact
/// string form "4;2,1,1,1,1,1,1".
inline DivisorClass divisor_class_from_json(const Json& j)
{
    if (j.is_string())
        return parse_divisor_class(j.get<std::string>());
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("divisor class JSON needs fields \"a\" and \"b\"");
    return DivisorClass(j.at("a").get<std::int64_t>(),
                        j.at("b").get<std::vector<std::int64_t>>());
}

// --- point configurations --------------------------------------------------

inline Json to_json(const PointConfiguration& c)
{
    Json j;
    j["r"] = c.r;
    j["collinear"] = c.collinear;
    j["conconic"] = c.conconic;
    Json near_pairs = Json::array();
    for (const auto& [i, k] : c.infinitely_near)
        near_pairs.push_back(Json::array({i, k}));
    j["infinitely_near"] = near_pairs;
    return j;
}

inline PointConfiguration configuration_from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("configuration JSON must be an object");
    PointConfiguration c;
    if (j.contains("r"))
        c.r = j.at("r").get<int>();
    if (j.contains("collinear"))
        c.collinear = j.at("collinear").get<std::vector<std::vector<int>>>();
    if (j.contains("conconic"))
        c.conconic = j.at("conconic").get<std::vector<std::vector<int>>>();
    if (j.contains("infinitely_near")) {
        for (const auto& pair : j.at("infinitely_near")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("infinitely_near entries must be pairs");
            c.infinitely_near.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        }
    }
    return c;
}

// --- Cremona certificates --------------------------------------------------

inline Json to_json(const ReductionStep& step)
{
    Json j;
    if (const auto* move = std::get_if<CremonaMove>(&step)) {
        j["centers"] = move->centers;
    } else {
        j["permute"] = std::get<IndexPermutation>(step).map;
    }
    return j;
}

inline ReductionStep reduction_step_from_json(const Json& j)
{
    if (j.is_object() && j.contains("centers")) {
        const auto centers = j.at("centers").get<std::vector<int>>();
        if (centers.size() != 3)
            throw std::invalid_argument("a Cremona move needs exactly three centers");
        return CremonaMove{{centers[0], centers[1], centers[2]}};
    }
    if (j.is_object() && j.contains("permute"))
        return IndexPermutation{j.at("permute").get<std::vector<int>>()};
    throw std::invalid_argument("reduction step JSON needs \"centers\" or \"permute\"");
}

inline Json to_json(const ReductionCertificate& cert)
{
    Json j;
    j["start"] = to_json(cert.start);
    Json moves = Json::array();
    for (const auto& step : cert.moves)
        moves.push_back(to_json(step));
    j["moves"] = moves;
    j["end"] = to_json(cert.end);
    return j;
}

inline ReductionCertificate certificate_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("start") || !j.contains("moves") || !j.contains("end"))
        throw std::invalid_argument("certificate JSON needs \"start\", \"moves\", and \"end\"");
    ReductionCertificate cert;
    cert.start = divisor_class_from_json(j.at("start"));
    for (const auto& step : j.at("moves"))
        cert.moves.push_back(reduction_step_from_json(step));
    cert.end = divisor_class_from_json(j.at("end"));
    return cert;
}

// --- polynomials and quadratic forms ---------------------------------------

/// Coefficients lowest-degree first, each an exact rational string.
inline Json coefficient_array(const Poly<Rational>& p)
{
    Json arr = Json::array();
    for (const auto& coeff : p.c)
        arr.push_back(to_string(coeff));
    return arr;
}

inline Poly<Rational> poly_from_coefficients(const Json& arr)
{
    if (!arr.is_array())
        throw std::invalid_argument("polynomial coefficients must be an array");
    std::vector<Rational> coeffs;
    for (const auto& entry : arr) {
        if (entry.is_string())
            coeffs.push_back(parse_rational(entry.get<std::string>()));
        else if (entry.is_number_integer())
            coeffs.push_back(Rational(entry.get<std::int64_t>()));
        else
            throw std::invalid_argument("polynomial coefficients must be rational strings");
    }
    return Poly<Rational>(std::move(coeffs));
}

inline Json to_json(const Poly<Rational>& p)
{
    Json j;
    j["coeffs"] = coefficient_array(p);
    return j;
}

/// Accepts {"coeffs": [...]} or a bare coefficient array.
inline Poly<Rational> poly_from_json(const Json& j)
{
    if (j.is_array())
        return poly_from_coefficients(j);
    if (j.is_object() && j.contains("coeffs"))
        return poly_from_coefficients(j.at("coeffs"));
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
}

inline Json to_json(const TernaryQuadraticForm& f)
{
    Json gram = Json::array();
    for (const auto& row : f.gram) {
        Json r = Json::array();
        for (const auto& entry : row)
            r.push_back(to_string(entry));
        gram.push_back(r);
    }
    Json j;
    j["gram"] = gram;
    return j;
}

inline TernaryQuadraticForm form_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("gram"))
        throw std::invalid_argument("quadratic form JSON needs a \"gram\" matrix");
    const Json& gram = j.at("gram");
    if (!gram.is_array() || gram.size() != 3)
        throw std::invalid_argument("Gram matrix must have three rows");
    std::array<std::array<Rational, 3>, 3> entries;
    for (std::size_t i = 0; i < 3; ++i) {
        const Json& row = gram.at(i);
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("Gram matrix rows must have three entries");
        for (std::size_t k = 0; k < 3; ++k) {
            const Json& cell = row.at(k);
            if (cell.is_string())
                entries[i][k] = parse_rational(cell.get<std::string>());
            else if (cell.is_number_integer())
                entries[i][k] = Rational(cell.get<std::int64_t>());
            else
                throw std::invalid_argument("Gram entries must be rational strings");
        }
    }
    return TernaryQuadraticForm(entries);
}

inline Json to_json(const Surface22& s)
{
    Json j;
    j["f0"] = to_json(s.f0);
    j["f1"] = to_json(s.f1);
    j["f2"] = to_json(s.f2);
    return j;
}

inline Surface22 surface_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("f0") || !j.contains("f1") || !j.contains("f2"))
        throw std::invalid_argument("surface JSON needs fields \"f0\", \"f1\", \"f2\"");
    return Surface22(form_from_json(j.at("f0")), form_from_json(j.at("f1")),
                     form_from_json(j.at("f2")));
}

inline Json to_json(const BinaryForm& f)
{
    Json j;
    j["coeffs"] = coefficient_array(f.dehom);
    j["formal_degree"] = f.formal_degree;
    return j;
}

// --- point clusters and analysis reports -----------------------------------

inline Json to_json(const AlgebraicPointCluster& c)
{
    Json j;
    j["modulus"] = coefficient_array(c.modulus);
    Json coords = Json::array();
    for (const auto& coord : c.coords)
        coords.push_back(coefficient_array(coord));
    j["coords"] = coords;
    return j;
}

inline AlgebraicPointCluster algebraic_cluster_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("modulus") || !j.contains("coords"))
        throw std::invalid_argument("cluster JSON needs \"modulus\" and \"coords\"");
    const Json& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != 3)
        throw std::invalid_argument("point cluster needs three coordinate polynomials");
    AlgebraicPointCluster c;
    c.modulus = poly_from_json(j.at("modulus"));
    for (std::size_t i = 0; i < 3; ++i)
        c.coords[i] = poly_from_json(coords.at(i));
    return c;
}

inline Json to_json(const FiberPointCluster& c)
{
    Json j;
    j["modulus"] = coefficient_array(c.modulus);
    Json coords = Json::array();
    for (const auto& coord : c.coords)
        coords.push_back(coefficient_array(coord));
    j["coords"] = coords;
    return j;
}

inline FiberPointCluster fiber_cluster_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("modulus") || !j.contains("coords"))
        throw std::invalid_argument("cluster JSON needs \"modulus\" and \"coords\"");
    const Json& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != 2)
        throw std::invalid_argument("fiber cluster needs two coordinate polynomials");
    FiberPointCluster c;
    c.modulus = poly_from_json(j.at("modulus"));
    for (std::size_t i = 0; i < 2; ++i)
        c.coords[i] = poly_from_json(coords.at(i));
    return c;
}

inline Json to_json(const CommonZeros& z)
{
    Json j;
    j["shared_component"] = z.shared_component;
    j["total_degree"] = z.shared_component ? Json(nullptr) : Json(z.total_degree());
    Json clusters = Json::array();
    for (const auto& c : z.clusters)
        clusters.push_back(to_json(c));
    j["clusters"] = clusters;
    return j;
}

inline Json to_json(const MinusTwoLine& line)
{
    Json j;
    j["point"] = to_json(line.point);
    j["display"] = to_string(line);
    return j;
}

inline Json to_json(const HonestyReport& r)
{
    Json j;
    j["honest"] = r.honest;
    j["everywhere_degenerate"] = r.everywhere_degenerate;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(to_json(w));
    j["witnesses"] = witnesses;
    return j;
}

inline Json to_json(const SingularComponent& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    switch (c.kind) {
    case SingularKind::Point:
        j["fiber"] = to_json(c.fiber);
        j["point"] = c.point ? to_json(*c.point) : Json(nullptr);
        break;
    case SingularKind::FiberLine: {
        j["fiber"] = to_json(c.fiber);
        Json span = Json::array();
        for (const auto& v : c.span) {
            Json vec = Json::array();
            for (const auto& coord : v)
                vec.push_back(coefficient_array(coord));
            span.push_back(vec);
        }
        j["span"] = span;
        break;
    }
    case SingularKind::WholeFiber:
        j["fiber"] = to_json(c.fiber);
        break;
    case SingularKind::BaseCurve: {
        Json curve = Json::array();
        for (const auto& coord : c.base_curve)
            curve.push_back(coefficient_array(coord));
        j["base_curve"] = curve;
        break;
    }
    }
    return j;
}

// --- ampleness reports -----------------------------------------------------

inline Json to_json(const AmplenessReport& r)
{
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["failed_condition"] = r.failed_condition;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["basis_class"] = to_json(r.basis_class);
    j["normalization"] = to_json(r.normalization);
    j["search_depth_used"] = r.search_depth_used;
    return j;
}

}  // namespace blowup7
