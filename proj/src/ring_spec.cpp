#include "klein4/ring_spec.hpp"

namespace k4 {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw SpecError(std::string("missing field \"") + key + "\"");
    return *it;
}

int require_int(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_number_integer()) throw SpecError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

CupRing build_ring(const json& body, bool strict, ParsedRing* top);

CupRing build_explicit(const json& body, bool strict) {
    const int dim = require_int(body, "dim");
    const json& u = require_field(body, "u");
    if (!u.is_array()) throw SpecError("field \"u\" must be an array of index triples");
    std::vector<std::array<int, 3>> triples;
    for (const json& t : u) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_number_integer())
            throw SpecError("each entry of \"u\" must be a triple [i,j,k] of integers");
        triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return CupRing::from_triples(dim, triples, strict);
}

SeifertData parse_seifert(const json& body) {
    SeifertData s;
    s.g = require_int(body, "g");
    s.b = require_int(body, "b");
    const json& cone = require_field(body, "cone");
    if (!cone.is_array()) throw SpecError("field \"cone\" must be an array of [alpha, beta] pairs");
    for (const json& p : cone) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            throw SpecError("each cone entry must be a pair [alpha, beta] of integers");
        const int alpha = p[0].get<int>(), beta = p[1].get<int>();
        if (alpha < 1) throw SpecError("Seifert invariant alpha must be >= 1");
        s.cone.emplace_back(alpha, beta);
    }
    if (s.g < 0) throw SpecError("genus must be >= 0");
    return s;
}

CupRing build_seifert(const json& body, ParsedRing* top) {
    SeifertData s = parse_seifert(body);
    // Only the two genus-1 rings are constructed; everywhere else the
    // fibered-space ring is not modelled here.
    if (seifert_parity(s) != 1)
        throw SpecError(
            "only Seifert data with g = 1, all alpha odd and b + sum(beta) even builds a ring "
            "here; other fibered rings are out of range of this tool");
    bool c_square_is_ab = false;
    if (const auto it = body.find("c_square_is_ab"); it != body.end()) {
        if (!it->is_boolean()) throw SpecError("field \"c_square_is_ab\" must be a boolean");
        c_square_is_ab = it->get<bool>();
    }
    if (top) top->seifert = std::move(s);
    return seifert_g1_ring(c_square_is_ab);
}

CupRing build_cover(const json& body, ParsedRing* top) {
    const int n = require_int(body, "components");
    const json& lk = require_field(body, "lk");
    if (!lk.is_array()) throw SpecError("field \"lk\" must be a square integer matrix");
    std::vector<std::vector<int>> m;
    for (const json& row : lk) {
        if (!row.is_array()) throw SpecError("field \"lk\" must be a square integer matrix");
        std::vector<int> r;
        for (const json& e : row) {
            if (!e.is_number_integer()) throw SpecError("linking matrix entries must be integers");
            r.push_back(e.get<int>());
        }
        m.push_back(std::move(r));
    }
    if (static_cast<int>(m.size()) != n)
        throw SpecError("linking matrix size does not match \"components\"");
    BranchedCover cover = branched_double_cover(LinkData::from_matrix(m));
    CupRing ring = cover.ring;
    if (top) top->cover = std::move(cover);
    return ring;
}

CupRing build_ring(const json& body, bool strict, ParsedRing* top) {
    const json& type = require_field(body, "type");
    if (!type.is_string()) throw SpecError("field \"type\" must be a string");
    const std::string t = type.get<std::string>();
    if (top) top->type = t;

    if (t == "explicit") return build_explicit(body, strict);
    if (t == "free") {
        const int n = require_int(body, "n");
        if (n < 0) throw SpecError("field \"n\" must be >= 0");
        return free_ring(n);
    }
    if (t == "rp3") return rp3();
    if (t == "connect_sum") {
        const json& parts = require_field(body, "parts");
        if (!parts.is_array()) throw SpecError("field \"parts\" must be an array");
        std::vector<CupRing> rings;
        for (const json& p : parts) rings.push_back(build_ring(p, strict, nullptr));
        return connect_sum(rings);
    }
    if (t == "borromean") {
        const json& f = require_field(body, "framings");
        if (!f.is_array() || f.size() != 3 || !f[0].is_number_integer() ||
            !f[1].is_number_integer() || !f[2].is_number_integer())
            throw SpecError("field \"framings\" must be three integers");
        return borromean(f[0].get<int>(), f[1].get<int>(), f[2].get<int>());
    }
    if (t == "seifert") return build_seifert(body, top);
    if (t == "branched_cover") return build_cover(body, top);
    throw SpecError("unknown ring type \"" + t + "\"");
}

}  // namespace

ParsedRing ring_from_spec(const nlohmann::json& spec, bool strict) {
    if (!spec.is_object()) throw SpecError("ring spec must be a JSON object");
    const json& schema = require_field(spec, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kRingSchema)
        throw SpecError(std::string("expected schema tag \"") + kRingSchema + "\"");
    ParsedRing parsed;
    parsed.ring = build_ring(spec, strict, &parsed);
    return parsed;
}

nlohmann::json ring_to_explicit_spec(const CupRing& r) {
    nlohmann::json u = nlohmann::json::array();
    for (const auto& t : r.triples()) u.push_back({t[0], t[1], t[2]});
    return nlohmann::json{{"schema", kRingSchema},
                          {"type", "explicit"},
                          {"dim", r.dim()},
                          {"u", std::move(u)}};
}

}  // namespace k4
