#include "qorw/walk_model.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "qorw/errors.hpp"
#include "qorw/tolerances.hpp"

namespace qorw {

namespace {

nlohmann::json mat2_to_json(const CMat2& m) {
    return nlohmann::json::parse(matrix_to_json(m));
}

CMat2 mat2_from_json(const nlohmann::json& j) {
    CMat m = matrix_from_json(j.dump());
    if (m.rows() != 2) throw structural_error("model file: coin matrices must be 2x2");
    return m;
}

nlohmann::json channel_to_json(const ChannelSpec& c) {
    nlohmann::json j;
    switch (c.kind) {
        case ChannelSpec::Kind::Unitary:
            j["type"] = "unitary";
            j["matrix"] = mat2_to_json(c.matrix);
            break;
        case ChannelSpec::Kind::AmplitudeDamping:
            j["type"] = "amplitude_damping";
            j["decay"] = c.decay;
            break;
        case ChannelSpec::Kind::Mixing:
            j["type"] = "mixing";
            j["matrix"] = mat2_to_json(c.matrix);
            j["p"] = c.p;
            break;
        case ChannelSpec::Kind::KrausList: {
            j["type"] = "kraus_list";
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& k : c.kraus) arr.push_back(mat2_to_json(k));
            j["kraus"] = arr;
            break;
        }
    }
    return j;
}

ChannelSpec channel_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "unitary") return ChannelSpec::unitary(mat2_from_json(j.at("matrix")));
    if (type == "amplitude_damping") return ChannelSpec::damping(j.at("decay").get<double>());
    if (type == "mixing")
        return ChannelSpec::mixing(mat2_from_json(j.at("matrix")), j.at("p").get<double>());
    if (type == "kraus_list") {
        std::vector<CMat2> ks;
        for (const auto& e : j.at("kraus")) ks.push_back(mat2_from_json(e));
        return ChannelSpec::kraus_list(std::move(ks));
    }
    throw structural_error("model file: unknown channel type '" + type + "'");
}

}  // namespace

KrausChannel ChannelSpec::build() const {
    switch (kind) {
        case Kind::Unitary: return unitary_channel(matrix);
        case Kind::AmplitudeDamping: return amplitude_damping(decay);
        case Kind::Mixing: return mixing_channel(matrix, p);
        case Kind::KrausList: {
            KrausChannel c;
            c.label = "kraus_list";
            for (const auto& k : kraus) c.kraus.push_back(k);
            return c;
        }
    }
    throw structural_error("ChannelSpec: bad kind");
}

ChannelSpec ChannelSpec::unitary(const CMat2& u) {
    ChannelSpec c;
    c.kind = Kind::Unitary;
    c.matrix = u;
    return c;
}

ChannelSpec ChannelSpec::damping(double decay) {
    ChannelSpec c;
    c.kind = Kind::AmplitudeDamping;
    c.decay = decay;
    return c;
}

ChannelSpec ChannelSpec::mixing(const CMat2& u, double p) {
    ChannelSpec c;
    c.kind = Kind::Mixing;
    c.matrix = u;
    c.p = p;
    return c;
}

ChannelSpec ChannelSpec::kraus_list(std::vector<CMat2> ks) {
    ChannelSpec c;
    c.kind = Kind::KrausList;
    c.kraus = std::move(ks);
    return c;
}

void WalkModel::validate() const {
    if (k < 1) throw structural_error("WalkModel: k must be >= 1");
    if (static_cast<int>(quantizers.size()) != k)
        throw structural_error("WalkModel: need exactly k quantizers");
    for (const auto& q : quantizers) {
        auto report = validate_cptp(q.build());
        if (!report.pass)
            throw structural_error("WalkModel: quantizer fails CPTP, deviation " +
                                   std::to_string(report.completeness_deviation));
    }
    if (entry_channel) {
        auto report = validate_cptp(entry_channel->build());
        if (!report.pass) throw structural_error("WalkModel: entry channel fails CPTP");
    }
    DensityMatrix check{CMat(coin_init)};  // throws if ρ_c is invalid
}

bool WalkModel::is_u_quantized() const {
    for (const auto& q : quantizers)
        if (!q.is_single_unitary()) return false;
    return true;
}

CMat2 WalkModel::reshuffling_unitary() const {
    if (!is_u_quantized() || entry_channel)
        throw usage_error("model is not U-quantized (k unitary sub-steps, no entry channel)");
    const CMat2 u = quantizers.front().matrix;
    for (const auto& q : quantizers)
        if (max_abs(q.matrix - u) > 0.0)
            throw usage_error("model uses different reshuffling matrices per sub-step");
    return u;
}

std::vector<KrausChannel> WalkModel::built_quantizers() const {
    std::vector<KrausChannel> out;
    out.reserve(quantizers.size());
    for (const auto& q : quantizers) out.push_back(q.build());
    return out;
}

std::optional<KrausChannel> WalkModel::built_entry() const {
    if (!entry_channel) return std::nullopt;
    return entry_channel->build();
}

WalkModel example_i(double q) {
    WalkModel m;
    m.k = 1;
    m.quantizers = {ChannelSpec::unitary(CMat2::Identity())};
    m.coin_init = DensityMatrix::diag2(q).mat();
    m.label = "example_i";
    return m;
}

WalkModel example_ii() {
    WalkModel m;
    m.k = 2;
    const CMat2 u = rotation_unitary(M_PI / 4.0);
    m.quantizers = {ChannelSpec::unitary(u), ChannelSpec::unitary(u)};
    m.coin_init = DensityMatrix::coin_plus().mat();
    m.label = "example_ii";
    return m;
}

WalkModel example_iii(double decay_t, double decay_tau, double q) {
    WalkModel m;
    m.k = 2;
    m.entry_channel = ChannelSpec::damping(decay_t);
    m.quantizers = {ChannelSpec::unitary(CMat2::Identity()), ChannelSpec::damping(decay_tau)};
    m.coin_init = DensityMatrix::diag2(q).mat();
    m.label = "example_iii";
    return m;
}

WalkModel example_iv(double q) {
    WalkModel m;
    m.k = 2;
    const CMat2 u = rotation_unitary(M_PI / 4.0);
    m.quantizers = {ChannelSpec::mixing(u, 0.5), ChannelSpec::mixing(u, 0.5)};
    m.coin_init = DensityMatrix::diag2(q).mat();
    m.label = "example_iv";
    return m;
}

WalkModel v3_model() {
    WalkModel m;
    m.k = 3;
    const CMat2 u = rotation_unitary(M_PI / 4.0);
    m.quantizers = {ChannelSpec::unitary(u), ChannelSpec::unitary(u), ChannelSpec::unitary(u)};
    m.coin_init = DensityMatrix::coin_plus().mat();
    m.label = "v3";
    return m;
}

WalkModel builtin(const std::string& name, double q, double decay_t, double decay_tau) {
    if (name == "example_i") return example_i(q);
    if (name == "example_ii") return example_ii();
    if (name == "example_iii") return example_iii(decay_t, decay_tau, q);
    if (name == "example_iv") return example_iv(q);
    if (name == "v3") return v3_model();
    throw usage_error("unknown builtin model '" + name + "'");
}

std::string model_to_json(const WalkModel& model) {
    nlohmann::json j;
    j["label"] = model.label;
    j["k"] = model.k;
    j["coin_init"] = mat2_to_json(model.coin_init);
    if (model.entry_channel) j["entry_channel"] = channel_to_json(*model.entry_channel);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : model.quantizers) arr.push_back(channel_to_json(q));
    j["quantizers"] = arr;
    return j.dump(2);
}

WalkModel model_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw structural_error(std::string("model file: ") + e.what());
    }
    WalkModel m;
    try {
        m.label = j.value("label", "");
        m.k = j.at("k").get<int>();
        m.coin_init = mat2_from_json(j.at("coin_init"));
        if (j.contains("entry_channel"))
            m.entry_channel = channel_from_json(j.at("entry_channel"));
        for (const auto& e : j.at("quantizers")) m.quantizers.push_back(channel_from_json(e));
    } catch (const nlohmann::json::exception& e) {
        throw structural_error(std::string("model file: ") + e.what());
    }
    m.validate();
    return m;
}

}  // namespace qorw
