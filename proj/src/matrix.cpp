#include "qorw/matrix.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <nlohmann/json.hpp>

#include "qorw/errors.hpp"

namespace qorw {

CMat2 sigma1() {
    CMat2 m;
    m << 0, 1, 1, 0;
    return m;
}

CMat2 sigma2() {
    CMat2 m;
    m << 0, -I_UNIT, I_UNIT, 0;
    return m;
}

CMat2 sigma3() {
    CMat2 m;
    m << 1, 0, 0, -1;
    return m;
}

CMat2 sigma_plus() {
    CMat2 m;
    m << 0, 1, 0, 0;
    return m;
}

CMat2 sigma_minus() {
    CMat2 m;
    m << 0, 0, 1, 0;
    return m;
}

CMat2 proj_plus() {
    CMat2 m;
    m << 1, 0, 0, 0;
    return m;
}

CMat2 proj_minus() {
    CMat2 m;
    m << 0, 0, 0, 1;
    return m;
}

bool is_finite(const CMat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                return false;
    return true;
}

CMat2 rotation_unitary(double theta) {
    CMat2 m;
    m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return m;
}

CMat kron(const CMat& a, const CMat& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

CMat tensor_power(const CMat& m, int s) {
    if (s < 1) throw usage_error("tensor_power: s must be >= 1");
    double dim = std::pow(static_cast<double>(m.rows()), s);
    if (dim > kTensorDimCap)
        throw resource_error("tensor_power: dim^s exceeds cap " + std::to_string(kTensorDimCap));
    CMat out = m;
    for (int i = 1; i < s; ++i) out = kron(out, m);
    return out;
}

CMat partial_trace_first(const CMat& m, int first_dim) {
    const Eigen::Index dim = m.rows();
    if (first_dim < 1 || dim % first_dim != 0)
        throw structural_error("partial_trace_first: dimension not divisible by first factor");
    const Eigen::Index d2 = dim / first_dim;
    CMat out = CMat::Zero(d2, d2);
    for (int a = 0; a < first_dim; ++a)
        out += m.block(a * d2, a * d2, d2, d2);
    return out;
}

CMat matrix_exponential(const CMat& m) {
    if (m.rows() > kTensorDimCap)
        throw resource_error("matrix_exponential: dimension exceeds cap");
    CMat out = m.exp();
    if (!is_finite(out)) throw numeric_error("matrix_exponential: result not finite");
    return out;
}

double max_abs(const CMat& m) {
    return m.cwiseAbs().maxCoeff();
}

std::string matrix_to_json(const CMat& m) {
    nlohmann::json j;
    j["dim"] = m.rows();
    auto& re = j["re"];
    auto& im = j["im"];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row_re = nlohmann::json::array();
        nlohmann::json row_im = nlohmann::json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row_re.push_back(m(i, k).real());
            row_im.push_back(m(i, k).imag());
        }
        re.push_back(row_re);
        im.push_back(row_im);
    }
    return j.dump();
}

CMat matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw structural_error("matrix_from_json: dim < 1");
    CMat m(dim, dim);
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            m(i, k) = Cx(re.at(i).at(k).get<double>(), im.at(i).at(k).get<double>());
    if (!is_finite(m)) throw structural_error("matrix_from_json: non-finite entries");
    return m;
}

}  // namespace qorw
