#pragma once

#include <vector>

#include "qorw/matrix.hpp"

namespace qorw {

// Truncated Taylor series in one real variable t, complex coefficients.
// Order-s jets carry coefficients of t^0..t^s; products truncate past t^s.
struct Jet {
    std::vector<Cx> c;

    explicit Jet(int order) : c(order + 1, Cx{0.0}) {}
    int order() const { return static_cast<int>(c.size()) - 1; }

    static Jet constant(int order, Cx value) {
        Jet j(order);
        j.c[0] = value;
        return j;
    }
};

Jet operator*(const Jet& a, const Jet& b);
Jet operator+(const Jet& a, const Jet& b);
Jet pow_jet(const Jet& a, int n);

// 2×2 matrix with jet-valued entries, stored as Taylor coefficient matrices.
struct JetMat2 {
    std::vector<CMat2> c;

    explicit JetMat2(int order) : c(order + 1, CMat2::Zero()) {}
    int order() const { return static_cast<int>(c.size()) - 1; }

    static JetMat2 constant(int order, const CMat2& value) {
        JetMat2 j(order);
        j.c[0] = value;
        return j;
    }
};

JetMat2 operator*(const JetMat2& a, const JetMat2& b);

Jet trace(const JetMat2& a);

// V_cl(φ + t) = diag(e^{i(φ+t)}, e^{−i(φ+t)}) expanded around t = 0.
JetMat2 vcl_jet(int order, double phi);

}  // namespace qorw
