#pragma once

#include <string>

#include "json.hpp"
#include "qgrass/peterson.hpp"
#include "qgrass/ring.hpp"
#include "qgrass/spectral.hpp"

namespace qgrass {

// 17 significant digits: enough to reproduce the double exactly.
std::string format_real(double v);
std::string format_complex(Cplx v);  // "re+imi", e.g. "4-2.5i"

nlohmann::json point_to_json(const PetersonPoint& p);
// Rebuilds the point from kind/n/doubled_indices/t and cross-checks the
// stored parity, closed flag and coordinates; mismatches throw.
PetersonPoint point_from_json(const nlohmann::json& j);

nlohmann::json ring_to_json(const RingElement& x);
RingElement ring_from_json(Kind kind, int n, const nlohmann::json& j);

nlohmann::json report_to_json(const ConjectureOReport& r);
ConjectureOReport report_from_json(const nlohmann::json& j);

}  // namespace qgrass
