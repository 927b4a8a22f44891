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

#ifndef HALPHEN_GROUP_HPP
#define HALPHEN_GROUP_HPP

#include <variant>

#include "arc.hpp"

namespace halphen {

// Invertible linear substitution on the coordinates; the determinant is
// recorded at construction.
struct LinearMap {
    QMat mat;
    Rational det;

    explicit LinearMap(QMat m) : mat(std::move(m)), det(det_scalar(mat)) {
        if (mat.rows() != mat.cols()) throw Error("BAD_DIMENSION", "linear map must be square");
        if (det == 0) throw Error("SINGULAR", "linear map must be invertible");
    }

    static LinearMap identity(int n) { return LinearMap(qmat_identity(n + 1)); }
};

// Unit series of G0, acting by multiplication on every coordinate.
struct Scaling {
    TruncSeries u;

    explicit Scaling(TruncSeries s) : u(std::move(s)) {
        if (u[0] == 0) throw Error("NOT_UNIT", "scaling series needs a nonzero constant term");
    }

    static Scaling identity(int precision) { return Scaling(TruncSeries::one(precision)); }
};

// Valuation-1 series of G1, acting by composition.
struct Reparam {
    TruncSeries v;

    explicit Reparam(TruncSeries s) : v(std::move(s)) {
        if (v[0] != 0 || v.precision() < 2 || v[1] == 0)
            throw Error("NOT_REPARAM", "reparametrisation needs valuation exactly 1");
    }

    static Reparam identity(int precision) { return Reparam(TruncSeries::t(precision)); }
};

using GroupElement = std::variant<LinearMap, Scaling, Reparam>;

inline Arc act(const LinearMap& g, const Arc& a) {
    if (g.mat.rows() != a.n() + 1) throw Error("BAD_DIMENSION", "linear map / arc mismatch");
    return Arc(g.mat * a.coords());
}

inline Arc act(const Scaling& g, const Arc& a) {
    std::vector<TruncSeries> c;
    c.reserve(static_cast<std::size_t>(a.n() + 1));
    for (const auto& s : a.coords()) c.push_back(s * g.u);
    return Arc(std::move(c));
}

inline Arc act(const Reparam& g, const Arc& a) {
    std::vector<TruncSeries> c;
    c.reserve(static_cast<std::size_t>(a.n() + 1));
    for (const auto& s : a.coords()) c.push_back(compose(s, g.v));
    return Arc(std::move(c));
}

inline Arc act(const GroupElement& g, const Arc& a) {
    return std::visit([&](const auto& h) { return act(h, a); }, g);
}

/*
 * Composite (M, u, v) acting as a |-> ((M a) * u) o v. This is the shape
 * normalisation procedures return: one linear map, one scaling, one
 * reparametrisation, applied in that order.
 */
struct GroupTriple {
    LinearMap linear;
    Scaling scaling;
    Reparam reparam;

    Arc apply(const Arc& a) const { return act(reparam, act(scaling, act(linear, a))); }

    static GroupTriple identity(int n, int precision) {
        return {LinearMap::identity(n), Scaling::identity(precision), Reparam::identity(precision)};
    }
};

// second o first as a single triple:
//   u = u1 * (u2 o rev(v1)),  v = v1 o v2,  M = M2 M1.
inline GroupTriple compose(const GroupTriple& second, const GroupTriple& first) {
    TruncSeries w = revert(first.reparam.v);
    TruncSeries u = first.scaling.u * compose(second.scaling.u, w);
    TruncSeries v = compose(first.reparam.v, second.reparam.v);
    return {LinearMap(second.linear.mat * first.linear.mat), Scaling(u), Reparam(v)};
}

}  // namespace halphen

#endif
