#include "qho/materials.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qho {

void validate(const MaterialParams& mat) {
    if (!(mat.eps_r > 1.0)) {
        throw std::domain_error("material: eps_r must exceed 1, got " +
                                std::to_string(mat.eps_r));
    }
    if (!(mat.m_eff_ratio > 0.0 && mat.m_eff_ratio < 1.0)) {
        throw std::domain_error("material: m*/m_e must lie in (0, 1), got " +
                                std::to_string(mat.m_eff_ratio));
    }
}

MaterialParams material_at(double x) {
    if (!(x >= 0.0 && x <= x_direct_gap_max)) {
        std::ostringstream msg;
        msg << "alloy fraction x = " << x << " outside the direct-gap range [0, "
            << x_direct_gap_max << "]";
        throw std::domain_error(msg.str());
    }
    MaterialParams mat{x, eps_r_gaas + eps_r_slope * x, m_eff_gaas + m_eff_slope * x};
    validate(mat);
    return mat;
}

MaterialParams material_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open material file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("material file " + path + ": " + e.what());
    }
    for (const auto& key : {"x", "eps_r", "m_eff_ratio"}) {
        if (!j.contains(key)) {
            throw std::runtime_error("material file " + path + ": missing field '" +
                                     key + "'");
        }
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "x" && it.key() != "eps_r" && it.key() != "m_eff_ratio") {
            throw std::runtime_error("material file " + path + ": unknown field '" +
                                     it.key() + "'");
        }
    }
    MaterialParams mat{j.at("x").get<double>(), j.at("eps_r").get<double>(),
                       j.at("m_eff_ratio").get<double>()};
    validate(mat);
    return mat;
}

} // namespace qho
