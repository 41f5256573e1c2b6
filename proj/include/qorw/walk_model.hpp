#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qorw/channel.hpp"
#include "qorw/matrix.hpp"

namespace qorw {

// Serializable description of one coin channel. Keeps construction parameters
// so model files round-trip exactly.
struct ChannelSpec {
    enum class Kind { Unitary, AmplitudeDamping, Mixing, KrausList };

    Kind kind = Kind::Unitary;
    CMat2 matrix = CMat2::Identity();  // unitary / mixing u
    double decay = 0.0;                // amplitude damping
    double p = 0.0;                    // mixing weight
    std::vector<CMat2> kraus;          // explicit Kraus list

    KrausChannel build() const;
    bool is_single_unitary() const { return kind == Kind::Unitary; }

    static ChannelSpec unitary(const CMat2& u);
    static ChannelSpec damping(double decay);
    static ChannelSpec mixing(const CMat2& u, double p);
    static ChannelSpec kraus_list(std::vector<CMat2> ks);
};

// A V^k walk: k alternations of quantizing channel and conditional shift,
// with an optional entry channel applied to the fresh coin each step.
struct WalkModel {
    int k = 0;
    std::vector<ChannelSpec> quantizers;         // ε_1..ε_k, in application order
    std::optional<ChannelSpec> entry_channel;    // ε_t, once per walk step
    CMat2 coin_init = CMat2::Zero();             // ρ_c
    std::string label;

    // Validates structure (k ≥ 1, channel count, CPTP channels, valid ρ_c).
    void validate() const;

    // True when every quantizer is a single unitary Kraus matrix.
    bool is_u_quantized() const;

    // For U-quantized models with no entry channel and one common reshuffling
    // matrix: returns U. Throws usage_error otherwise.
    CMat2 reshuffling_unitary() const;

    std::vector<KrausChannel> built_quantizers() const;
    std::optional<KrausChannel> built_entry() const;
};

// Built-in model library; closed-form kernels for these live in the tests.
WalkModel example_i(double q = 0.5);
WalkModel example_ii();
WalkModel example_iii(double decay_t, double decay_tau, double q);
WalkModel example_iv(double q);
WalkModel v3_model();  // k=3 U-rule with U_{π/4} and ρ_c = |+⟩⟨+|

// Lookup by name; throws usage_error for unknown names.
WalkModel builtin(const std::string& name, double q = 0.5,
                  double decay_t = 0.3, double decay_tau = 0.5);

// Model file format: {label, k, coin_init, entry_channel?, quantizers:[...]}.
std::string model_to_json(const WalkModel& model);
WalkModel model_from_json(const std::string& text);

}  // namespace qorw
