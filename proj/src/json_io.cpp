#include "bott/json_io.hpp"

namespace bott {

nlohmann::ordered_json fingerprint_json(const InvariantFingerprint& f) {
    nlohmann::ordered_json j;
    j["n"] = f.type.size();
    j["type"] = f.type;
    j["rank"] = f.rank;
    if (f.odd_height)
        j["odd_height"] = *f.odd_height;
    else
        j["odd_height"] = "inf";
    j["sibling_profile"] = f.sibling_profile;
    nlohmann::ordered_json cut;
    for (std::size_t mask = 0; mask < f.cutrank.by_level_subset.size(); ++mask)
        cut[std::to_string(mask)] = f.cutrank.by_level_subset[mask];
    j["cutrank_levels"] = std::move(cut);
    j["consecutive_ranks"] = f.cutrank.consecutive;
    j["betti"] = f.betti;
    j["orientable"] = f.orientable;
    j["symplectic"] = f.symplectic;
    return j;
}

nlohmann::ordered_json classification_json(const ClassificationSummary& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["D"] = s.class_count();
    j["O"] = s.orientable_count();
    j["S"] = s.symplectic_count();
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& r : s.records) {
        nlohmann::ordered_json c;
        c["canon"] = r.canonical.to_hex();
        c["members"] = r.member_count;
        c["orientable"] = r.orientable;
        c["symplectic"] = r.symplectic;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    return j;
}

std::string classification_csv(const ClassificationSummary& s) {
    std::string out = "canon,members,orientable,symplectic\n";
    for (const auto& r : s.records) {
        out += r.canonical.to_hex();
        out += ',';
        out += std::to_string(r.member_count);
        out += r.orientable ? ",true" : ",false";
        out += r.symplectic ? ",true\n" : ",false\n";
    }
    return out;
}

nlohmann::ordered_json decomposition_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["isolated"] = d.isolated_count;
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& f : d.factors) factors.push_back(f.canonical.to_hex());
    j["factors"] = std::move(factors);
    j["witness"] = d.witness.to_hex();
    return j;
}

}  // namespace bott
