#pragma once

#include <string>

#include <json.hpp>

#include "hpoly/generators.hpp"
#include "hpoly/poly.hpp"
#include "hpoly/restraint.hpp"

namespace hpoly {

// Machine form of a polynomial: "numerator/denominator" strings in
// ascending power order.
inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
    return arr;
}

inline Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::domain_error("poly_from_json: expected an array");
    std::vector<mpq_class> coeffs;
    for (const auto& item : j) {
        if (!item.is_string()) throw std::domain_error("poly_from_json: expected rational strings");
        mpq_class q;
        if (q.set_str(item.get<std::string>(), 10) != 0)
            throw std::domain_error("poly_from_json: bad rational " + item.get<std::string>());
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Poly(std::move(coeffs));
}

// Restraints as {"vertex": [colors...]}; every vertex appears, so the
// paired graph's vertex count round-trips.
inline nlohmann::json restraint_to_json(const Restraint& r) {
    nlohmann::json obj = nlohmann::json::object();
    for (int v = 0; v < r.size(); ++v) obj[std::to_string(v)] = r.forbidden(v);
    return obj;
}

inline Restraint restraint_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::domain_error("restraint_from_json: expected an object");
    int n = 0;
    for (const auto& [key, value] : j.items()) n = std::max(n, std::stoi(key) + 1);
    Restraint r(n);
    for (const auto& [key, value] : j.items())
        for (const auto& c : value) r.forbid(std::stoi(key), c.get<int>());
    return r;
}

inline nlohmann::json generator_to_json(const Generator& gen) {
    return nlohmann::json{{"u", gen.u}, {"colorings", gen.colorings}, {"kappa", gen.kappa}};
}

}  // namespace hpoly
