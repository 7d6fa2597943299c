#ifndef BKM_JSONIO_HPP
#define BKM_JSONIO_HPP

#include <json.hpp>

#include "bkm/algebra.hpp"
#include "bkm/bipoly.hpp"
#include "bkm/phi.hpp"
#include "bkm/structure.hpp"

namespace bkm {

/// {"terms":[{"s":j,"t":k,"re":"p/q","im":"p/q"}...]}, graded-lex descending
/// (matching the pretty printer); rationals as strings for exactness.
inline nlohmann::json poly_to_json(const BiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        terms.push_back({{"s", m.s}, {"t", m.t}, {"re", c.re().get_str()}, {"im", c.im().get_str()}});
    }
    return {{"terms", terms}};
}

inline nlohmann::json scalar_to_json(const GaussianRational& c) {
    return {{"re", c.re().get_str()}, {"im", c.im().get_str()}};
}

inline nlohmann::json element_to_json(const AlgebraElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back({{"family", std::string(1, family_letter(g.family))},
                         {"index", g.index},
                         {"re", c.re().get_str()},
                         {"im", c.im().get_str()}});
    return {{"terms", terms}};
}

inline nlohmann::json params_to_json(const PhiParams& p) {
    return {{"lambda", scalar_to_json(p.lambda)},
            {"alpha", scalar_to_json(p.alpha)},
            {"beta", scalar_to_json(p.beta)},
            {"rho", scalar_to_json(p.rho)},
            {"h", poly_to_json(p.h)}};
}

inline nlohmann::json orbit_report_to_json(const OrbitReport& r) {
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& [v, c] : r.one_certificate)
        cert.push_back({{"vector", poly_to_json(v)}, {"coeff", scalar_to_json(c)}});
    return {{"basis_size", r.basis_size},
            {"contains_one", r.contains_one},
            {"truncated", r.truncated},
            {"index_range", r.index_range},
            {"box", {{"max_s", r.box.max_s}, {"max_t", r.box.max_t}}},
            {"one_certificate", cert}};
}

}  // namespace bkm

#endif
