#include "qorw/jet.hpp"

#include <cmath>

#include "qorw/errors.hpp"

namespace qorw {

Jet operator*(const Jet& a, const Jet& b) {
    Jet out(a.order());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order() && j <= b.order(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

Jet pow_jet(const Jet& a, int n) {
    if (n < 0) throw usage_error("pow_jet: negative power");
    Jet out = Jet::constant(a.order(), Cx{1.0});
    Jet base = a;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

JetMat2 operator*(const JetMat2& a, const JetMat2& b) {
    JetMat2 out(a.order());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order() && j <= b.order(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

Jet trace(const JetMat2& a) {
    Jet out(a.order());
    for (int i = 0; i <= a.order(); ++i) out.c[i] = a.c[i].trace();
    return out;
}

JetMat2 vcl_jet(int order, double phi) {
    JetMat2 out(order);
    const Cx ep = std::exp(I_UNIT * phi);
    const Cx em = std::conj(ep);
    double fact = 1.0;
    Cx ip{1.0}, im{1.0};  // (±i)^j
    for (int j = 0; j <= order; ++j) {
        if (j > 0) {
            fact *= j;
            ip *= I_UNIT;
            im *= -I_UNIT;
        }
        CMat2 m = CMat2::Zero();
        m(0, 0) = ep * ip / fact;
        m(1, 1) = em * im / fact;
        out.c[j] = m;
    }
    return out;
}

}  // namespace qorw
