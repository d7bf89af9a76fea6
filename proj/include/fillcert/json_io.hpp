#pragma once

// JSON encodings of links, matrices, certificates and finger-move maps.
// Integers that overflow 64 bits are written as decimal strings.

#include <cstdint>

#include <json.hpp>

#include "fillcert/certifier.hpp"
#include "fillcert/fingers.hpp"
#include "fillcert/link_spec.hpp"

namespace fillcert {

using Json = nlohmann::json;

Json to_json(const LinkSpec& link);
LinkSpec link_from_json(const Json& j);

Json to_json(const LinkingMatrix& m);
LinkingMatrix matrix_from_json(const Json& j);

/// Includes every degree's matrix under "matrices", keyed by matrixRef.
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const FingerMoveMap& f);
FingerMoveMap finger_map_from_json(const Json& j);

/// Everything needed to re-run one finger-move check.
struct FingerReplay {
    int k = 1;
    uint64_t seed = 0;
    LinkSpec link;
    FingerMoveMap map;
};

Json to_json(const FingerReplay& r);
FingerReplay replay_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace fillcert
