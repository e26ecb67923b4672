#include "osc/signal.hpp"

namespace osc {

std::string to_string(SystemKind k) {
    switch (k) {
        case SystemKind::heisenberg: return "heisenberg";
        case SystemKind::split_oscillator: return "split";
        case SystemKind::nonsplit_oscillator: return "nonsplit";
        case SystemKind::oscillator: return "oscillator";
        case SystemKind::extended: return "extended";
        case SystemKind::standard: return "standard";
        case SystemKind::external: return "external";
    }
    return "external";
}

SystemKind system_kind_from_string(const std::string& s) {
    if (s == "heisenberg") return SystemKind::heisenberg;
    if (s == "split") return SystemKind::split_oscillator;
    if (s == "nonsplit") return SystemKind::nonsplit_oscillator;
    if (s == "oscillator") return SystemKind::oscillator;
    if (s == "extended") return SystemKind::extended;
    if (s == "standard") return SystemKind::standard;
    if (s == "external") return SystemKind::external;
    throw ParseError("unknown system kind: " + s);
}

std::string Provenance::key() const {
    switch (type) {
        case Type::external: return "ext:" + label;
        case Type::standard_character: return "std:" + std::to_string(character);
        case Type::line_character:
            return "line:" + std::to_string(group_id) + ":" + std::to_string(character);
        case Type::torus_character:
            return "torus:" + std::to_string(group_id) + ":" + std::to_string(character);
        case Type::translate:
            return "tr:" + std::to_string(tau) + "," + std::to_string(w) + ":" +
                   std::to_string(group_id);
    }
    return label;
}

void fix_phase(CVec& v, double zero_tol) {
    const double thresh = zero_tol * v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v[i]);
        if (a > thresh) {
            v *= std::conj(v[i]) / a;
            return;
        }
    }
}

}  // namespace osc
