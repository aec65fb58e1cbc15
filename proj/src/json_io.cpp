#include "specgeo/json_io.hpp"

#include <stdexcept>

namespace specgeo {

namespace {

std::string hex_encode(const Encoding& e) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    for (unsigned char c : e) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

}  // namespace

Json poly_to_json(const IntegerPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_string(c));
    return a;
}

IntegerPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected array");
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
    return IntegerPolynomial(std::move(coeffs));
}

Json group_to_json(const GroupPtr& g) {
    Json j;
    j["name"] = g->carrier()->name();
    j["order"] = g->order();
    j["generators"] = g->generators();
    Json elts = Json::array();
    for (size_t i = 0; i < g->order(); ++i) elts.push_back(hex_encode(g->encoding((int)i)));
    j["elements_hex"] = std::move(elts);
    j["content_hash"] = hash_hex(g->content_hash());
    return j;
}

Json subgroup_to_json(const Subgroup& h) {
    Json j;
    j["order"] = h.order();
    j["members"] = h.members;
    j["content_hash"] = hash_hex(h.content_hash());
    j["group_hash"] = hash_hex(h.parent->content_hash());
    return j;
}

Json character_table_to_json(const CharacterTable& t) {
    Json j;
    j["group_hash"] = hash_hex(t.group->content_hash());
    j["prime"] = t.prime;
    j["exponent"] = t.exponent;
    j["root_of_unity"] = t.root_of_unity;
    j["class_sizes"] = t.classes.class_sizes;
    j["class_reps"] = t.classes.class_reps;
    j["degrees"] = t.degrees;
    j["values"] = t.values;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["relation"] = relation_name(c.relation);
    j["verdict"] = c.verdict;
    j["group_hash"] = hash_hex(c.group_hash);
    j["h_hash"] = hash_hex(c.h_hash);
    j["k_hash"] = hash_hex(c.k_hash);
    switch (c.relation) {
        case Relation::almost_conjugate: {
            Json e = Json::array();
            for (const auto& [h, k] : c.class_counts) e.push_back({h, k});
            j["class_counts"] = std::move(e);
            break;
        }
        case Relation::elementwise_conjugate: {
            Json e = Json::array();
            for (const auto& [h, k] : c.class_meets) e.push_back({h, k});
            j["class_meets"] = std::move(e);
            break;
        }
        case Relation::fixed_point_equivalent: {
            Json e = Json::array();
            for (const auto& [h, k] : c.fixed_dims) e.push_back({h, k});
            j["fixed_dims"] = std::move(e);
            break;
        }
        case Relation::primitive:
            j["element_orders"] = c.element_orders;
            j["core_members"] = c.core_members;
            break;
    }
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    const std::string rel = j.at("relation").get<std::string>();
    if (rel == "almost_conjugate")
        c.relation = Relation::almost_conjugate;
    else if (rel == "elementwise_conjugate")
        c.relation = Relation::elementwise_conjugate;
    else if (rel == "fixed_point_equivalent")
        c.relation = Relation::fixed_point_equivalent;
    else if (rel == "primitive")
        c.relation = Relation::primitive;
    else
        throw std::invalid_argument("certificate_from_json: unknown relation " + rel);
    c.verdict = j.at("verdict").get<bool>();
    c.group_hash = std::stoull(j.at("group_hash").get<std::string>(), nullptr, 16);
    c.h_hash = std::stoull(j.at("h_hash").get<std::string>(), nullptr, 16);
    c.k_hash = std::stoull(j.at("k_hash").get<std::string>(), nullptr, 16);
    if (j.contains("class_counts"))
        for (const auto& e : j["class_counts"])
            c.class_counts.push_back({e.at(0).get<uint64_t>(), e.at(1).get<uint64_t>()});
    if (j.contains("class_meets"))
        for (const auto& e : j["class_meets"])
            c.class_meets.push_back({e.at(0).get<bool>(), e.at(1).get<bool>()});
    if (j.contains("fixed_dims"))
        for (const auto& e : j["fixed_dims"])
            c.fixed_dims.push_back({e.at(0).get<uint64_t>(), e.at(1).get<uint64_t>()});
    if (j.contains("element_orders"))
        c.element_orders = j["element_orders"].get<std::vector<uint64_t>>();
    if (j.contains("core_members")) c.core_members = j["core_members"].get<std::vector<int>>();
    return c;
}

Json spectrum_to_json(const TraceSpectrum& s) {
    Json j;
    j["cutoff"] = s.cutoff;
    j["primitive_only"] = s.primitive_only;
    j["completeness_floor"] = to_string(s.completeness_floor);
    Json e = Json::object();
    for (const auto& [tr, mult] : s.entries) e[to_string(tr)] = mult;
    j["entries"] = std::move(e);
    return j;
}

Json cocompactness_to_json(const CocompactnessVerdict& v) {
    Json j;
    switch (v.verdict) {
        case Cocompactness::cocompact: j["verdict"] = "cocompact"; break;
        case Cocompactness::noncocompact: j["verdict"] = "noncocompact"; break;
        case Cocompactness::indeterminate: j["verdict"] = "indeterminate"; break;
    }
    j["rule"] = v.rule;
    if (v.witness) {
        Json w = Json::array();
        for (const auto& c : *v.witness) w.push_back(to_string(c));
        j["witness"] = std::move(w);
    }
    if (v.obstruction_modulus) j["obstruction_modulus"] = *v.obstruction_modulus;
    return j;
}

uint64_t json_content_hash(const Json& j) {
    const std::string dump = j.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(uint64_t h) {
    static const char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 15];
        h >>= 4;
    }
    return s;
}

}  // namespace specgeo
