#ifndef MAGICLAT_JSON_IO_HPP
#define MAGICLAT_JSON_IO_HPP

#include <magiclat/magic.hpp>
#include <magiclat/survey.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace magiclat {

using nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.

inline json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

inline json vec_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline std::vector<Int> vec_from_json(const json& j) {
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

inline json to_json(const AbelianGroupStructure& g) {
    return {{"torsion", vec_to_json(g.torsion)}, {"free_rank", g.free_rank}};
}

inline AbelianGroupStructure group_from_json(const json& j) {
    AbelianGroupStructure g;
    g.torsion = vec_from_json(j.at("torsion"));
    g.free_rank = j.at("free_rank").get<std::size_t>();
    return g;
}

inline json to_json(const GroupLabeling& lab) {
    json values = json::array();
    for (const GroupElement& e : lab.values) values.push_back(vec_to_json(e));
    return {{"group", to_json(lab.group)},
            {"values", values},
            {"magic_constant", vec_to_json(lab.magic_constant)}};
}

inline json to_json(const IntLabeling& lab) {
    return {{"values", vec_to_json(lab.values)},
            {"magic_constant", int_to_json(lab.magic_constant)}};
}

/// Group labelings carry a "group" key; integer labelings do not.
inline std::variant<GroupLabeling, IntLabeling> labeling_from_json(const json& j) {
    if (j.contains("group")) {
        GroupLabeling lab;
        lab.group = group_from_json(j.at("group"));
        for (const auto& e : j.at("values")) lab.values.push_back(vec_from_json(e));
        lab.magic_constant = vec_from_json(j.at("magic_constant"));
        return lab;
    }
    IntLabeling lab;
    lab.values = vec_from_json(j.at("values"));
    lab.magic_constant = int_from_json(j.at("magic_constant"));
    return lab;
}

inline json to_json(const Certificate& c) {
    return {{"pair", {c.p, c.q}},
            {"coeffs", vec_to_json(c.coeffs)},
            {"denominator", int_to_json(c.denominator)}};
}

inline json to_json(const Verdict& v) {
    json out;
    out["kind"] = v.magic() ? "Magic" : "NotMagic";
    if (v.obstruction) {
        out["pair"] = {v.obstruction->p, v.obstruction->q};
        out["coeffs"] = vec_to_json(v.obstruction->coeffs);
        out["denominator"] = int_to_json(v.obstruction->denominator);
    }
    if (v.group_witness) {
        out["group"] = to_json(v.group_witness->group);
        json values = json::array();
        for (const GroupElement& e : v.group_witness->values) values.push_back(vec_to_json(e));
        out["values"] = values;
        out["magic_constant"] = vec_to_json(v.group_witness->magic_constant);
    }
    if (v.int_witness) {
        out["values"] = vec_to_json(v.int_witness->values);
        out["magic_constant"] = int_to_json(v.int_witness->magic_constant);
    }
    return out;
}

inline json to_json(const SurveyRow& r) {
    return {{"n", r.n},
            {"total", r.total},
            {"with_small", r.with_small},
            {"magic", r.magic},
            {"magic_over_int", r.magic_over_int}};
}

}  // namespace magiclat

#endif
