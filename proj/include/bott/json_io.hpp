#pragma once

#include <string>

#include <json.hpp>

#include "bott/classify.hpp"
#include "bott/decompose.hpp"
#include "bott/invariants.hpp"

namespace bott {

// Field order is fixed so output can be diffed across runs.
nlohmann::ordered_json fingerprint_json(const InvariantFingerprint& f);

nlohmann::ordered_json classification_json(const ClassificationSummary& s);
std::string classification_csv(const ClassificationSummary& s);

nlohmann::ordered_json decomposition_json(const Decomposition& d);

}  // namespace bott
