/*
   Copyright 2026 The tmon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TMON_JSON_IO_HPP
#define TMON_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "brauer.hpp"

namespace tmon::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }
inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}
inline json to_json(const Poly& p) { return to_json(p.coeffs()); }
inline json to_json(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}
inline json to_json(const Subspace& s) { return to_json(s.basis()); }
inline json to_json(const EtaleAlgebra& e) {
    json f = json::array();
    for (const auto& p : e.factors()) f.push_back(to_json(p));
    return {{"factors", f}};
}
inline json element_json(const AlgElement& u) { return {{"coords", to_json(u.coords())}}; }
inline json to_json(const Configuration& c) { return {{"x", to_json(c.x.coords())}, {"y", to_json(c.y.coords())}}; }
inline json to_json(const ChartPoint& p) {
    return {{"pivots", {p.pivots.first, p.pivots.second}}, {"coords", to_json(p.coords)}};
}
inline json to_json(const QuaternionAlgebra& A) { return {{"a", A.a().str()}, {"b", A.b().str()}}; }
inline json to_json(const QuaternionOverFt& A) { return {{"f", to_json(A.f())}, {"g", to_json(A.g())}}; }

inline json to_json(const ParamContext& ctx, std::uint64_t seed) {
    return {{"algebra", to_json(ctx.algebra())},
            {"seed", seed},
            {"degree", ctx.degree()},
            {"s", ctx.s()},
            {"a", to_json(ctx.generator().coords())},
            {"c_H", to_json(ctx.c_h().coords())},
            {"W", to_json(ctx.w())},
            {"Z", to_json(ctx.z())},
            {"checks",
             {{"power_rank", ctx.checks().power_rank},
              {"witness_dim", ctx.checks().witness_dim},
              {"witness_dual_norm", ctx.checks().witness_dual_norm.str()},
              {"z_dim", ctx.checks().z_dim}}}};
}

inline json to_json(const ResidueClass& r) {
    json out = {{"place", r.place.str()}, {"status", to_string(r.status)}, {"v_f", r.v_f}, {"v_g", r.v_g}};
    if (r.square_class) out["class"] = r.square_class->str();
    else out["representative"] = to_json(r.representative);
    return out;
}

inline json to_json(const WitnessCertificate& c) {
    json symbols = json::array();
    for (const auto& s : c.local_symbols) symbols.push_back({{"place", s.place.str()}, {"symbol", s.value}});
    json ram = json::array();
    for (const auto& p : c.ramified) ram.push_back(p.str());
    json checks = json::array();
    json transcript = json::array();
    transcript.push_back("local symbols of " + c.algebra.str() + " computed at " + std::to_string(c.local_symbols.size()) + " places");
    transcript.push_back(std::string("ramified at ") + (ram.empty() ? "no place" : ram.dump()) + ": A is " +
                         (c.division ? "a division algebra" : "split"));
    for (const auto& f : c.factor_checks) {
        checks.push_back({{"factor", f.factor}, {"discriminant", f.discriminant.str()}, {"splits", f.splits}});
        transcript.push_back("factor " + std::to_string(f.factor) + " " + c.etale.factor(f.factor).str() + ": disc " + f.discriminant.str() +
                             (f.splits ? " splits A" : " does not split A"));
    }
    transcript.push_back(std::string("A split by E: ") + (c.split_by_etale ? "yes" : "no"));
    return {{"n", c.n},
            {"multiplicities", {c.multiplicities[0], c.multiplicities[1], c.multiplicities[2]}},
            {"quaternion", to_json(c.algebra)},
            {"algebra", to_json(c.etale)},
            {"local_symbols", symbols},
            {"ramified", ram},
            {"factor_checks", checks},
            {"facts", {{"division", c.division}, {"split_by_etale", c.split_by_etale}}},
            {"conclusion", c.valid() ? "twisted form of M_{0,n} attached to E is not retract rational" : "no conclusion"},
            {"transcript", transcript}};
}

// ---- parsing ----

inline Rational rational_from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

inline Vector vector_from(const json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of rationals, got " + j.dump());
    Vector v;
    for (const auto& x : j) v.push_back(rational_from(x));
    return v;
}

inline Poly poly_from(const json& j) { return Poly(vector_from(j)); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

inline EtaleAlgebra algebra_from(const json& j) {
    const json& f = field(j, "factors");
    if (!f.is_array()) fail(ErrorCode::ParseError, "'factors' must be an array");
    std::vector<Poly> ps;
    for (const auto& p : f) ps.push_back(poly_from(p));
    return EtaleAlgebra(std::move(ps));
}

inline AlgElement element_from(const json& j, const EtaleAlgebra& e) {
    return e.element(vector_from(j.is_object() ? field(j, "coords") : j));
}

inline Configuration configuration_from(const json& j, const EtaleAlgebra& e) {
    return {e.element(vector_from(field(j, "x"))), e.element(vector_from(field(j, "y")))};
}

inline Subspace subspace_from(const json& j, std::size_t ambient) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "subspace must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from(r));
    if (rows.empty()) return Subspace::zero(ambient);
    return Subspace::span(ambient, rows);
}

/// Rebuilds a context from its serialized generator and hyperplane dual, and
/// checks that the stored Z (when present) matches the recomputed one.
inline ParamContext context_from(const json& j) {
    EtaleAlgebra e = algebra_from(field(j, "algebra"));
    ParamContext ctx = ParamContext::make(e, element_from(field(j, "a"), e), element_from(field(j, "c_H"), e));
    if (j.contains("Z") && !(subspace_from(j.at("Z"), e.degree()) == ctx.z()))
        fail(ErrorCode::InvalidArgument, "stored Z does not match the recomputed subspace");
    return ctx;
}

inline ChartPoint chart_from(const json& j) {
    const json& p = field(j, "pivots");
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        fail(ErrorCode::MalformedProfile, "pivots must be a pair of integers");
    if (p[0].get<long>() < 1 || p[1].get<long>() < 1) fail(ErrorCode::MalformedProfile, "pivots are 1-based");
    return {{p[0].get<std::size_t>(), p[1].get<std::size_t>()}, vector_from(field(j, "coords"))};
}

inline QuaternionAlgebra quaternion_from(const json& j) { return {rational_from(field(j, "a")), rational_from(field(j, "b"))}; }
inline QuaternionOverFt ft_quaternion_from(const json& j) { return {poly_from(field(j, "f")), poly_from(field(j, "g"))}; }

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        fail(ErrorCode::ParseError, path + ": " + ex.what());
    }
}

}  // namespace tmon::io

#endif  // TMON_JSON_IO_HPP
