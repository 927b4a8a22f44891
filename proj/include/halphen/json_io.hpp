/*
   Copyright 2026 The Halphen Library Authors

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

#ifndef HALPHEN_JSON_IO_HPP
#define HALPHEN_JSON_IO_HPP

#include <json.hpp>

#include "canonical.hpp"
#include "ode.hpp"

namespace halphen {

// ordered_json keeps key order stable so output is deterministic.
using Json = nlohmann::ordered_json;

inline Json series_to_json(const TruncSeries& s) {
    Json arr = Json::array();
    for (int k = 0; k < s.precision(); ++k) arr.push_back(to_string(s[k]));
    return arr;
}

inline TruncSeries series_from_json(const Json& j, int precision) {
    if (!j.is_array()) throw Error("BAD_INPUT", "series must be an array of rational strings");
    std::vector<Rational> c(static_cast<std::size_t>(precision));
    if (static_cast<int>(j.size()) != precision)
        throw Error("BAD_INPUT", "series length does not match the declared precision");
    for (int k = 0; k < precision; ++k)
        c[static_cast<std::size_t>(k)] = parse_rational(j.at(static_cast<std::size_t>(k)).get<std::string>());
    return TruncSeries(std::move(c));
}

// {"n": int, "precision": int, "coords": [[rational-string, ...], ...]}
inline Json arc_to_json(const Arc& a) {
    Json j;
    j["n"] = a.n();
    j["precision"] = a.precision();
    Json coords = Json::array();
    for (int i = 0; i <= a.n(); ++i) coords.push_back(series_to_json(a.coord(i)));
    j["coords"] = std::move(coords);
    return j;
}

inline Arc arc_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("precision") || !j.contains("coords"))
        throw Error("BAD_INPUT", "arc JSON needs keys n, precision, coords");
    int n = j.at("n").get<int>();
    int p = j.at("precision").get<int>();
    if (n < 1 || p < 2) throw Error("BAD_INPUT", "arc needs n >= 1 and precision >= 2");
    const Json& coords = j.at("coords");
    if (!coords.is_array() || static_cast<int>(coords.size()) != n + 1)
        throw Error("BAD_INPUT", "coords must hold n+1 coordinate series");
    std::vector<TruncSeries> c;
    for (int i = 0; i <= n; ++i) c.push_back(series_from_json(coords.at(static_cast<std::size_t>(i)), p));
    return Arc(std::move(c));
}

// {"order": m, "precision": int, "coeffs": [[...], ...]} for c_1..c_m
inline Json ode_to_json(const DiffOperator& l) {
    Json j;
    j["order"] = l.order();
    j["precision"] = l.precision();
    Json coeffs = Json::array();
    for (int i = 1; i <= l.order(); ++i) coeffs.push_back(series_to_json(l.coeff(i)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline DiffOperator ode_from_json(const Json& j) {
    if (!j.contains("order") || !j.contains("precision") || !j.contains("coeffs"))
        throw Error("BAD_INPUT", "ODE JSON needs keys order, precision, coeffs");
    int m = j.at("order").get<int>();
    int p = j.at("precision").get<int>();
    if (m < 1 || p < 1) throw Error("BAD_INPUT", "ODE needs order >= 1 and precision >= 1");
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != m)
        throw Error("BAD_INPUT", "coeffs must hold the m series c_1..c_m");
    std::vector<TruncSeries> c;
    for (int i = 0; i < m; ++i) c.push_back(series_from_json(coeffs.at(static_cast<std::size_t>(i)), p));
    return DiffOperator(std::move(c));
}

inline Json matrix_to_json(const QMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json group_to_json(const GroupTriple& g) {
    Json j;
    j["linear"] = matrix_to_json(g.linear.mat);
    j["scaling"] = series_to_json(g.scaling.u);
    j["reparam"] = series_to_json(g.reparam.v);
    return j;
}

inline Json form_b_to_json(const CanonicalFormB& f) {
    Json j;
    j["arc"] = arc_to_json(f.arc);
    j["group"] = group_to_json(f.group);
    Json r = Json::array();
    for (const Rational& q : f.residual) r.push_back(to_string(q));
    j["residual"] = std::move(r);
    return j;
}

inline Json form_mu3_to_json(const CanonicalFormMu3& f) {
    Json j;
    j["arc"] = arc_to_json(f.arc);
    j["group"] = group_to_json(f.group);
    j["alpha"] = to_string(f.alpha);
    j["exact"] = f.exact;
    return j;
}

}  // namespace halphen

#endif
