#pragma once

#include <nlohmann/json.hpp>

#include "haga/config.hpp"
#include "haga/verifier.hpp"

namespace haga {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings ("p" when q = 1), points as [x, y],
// lines as [a, b, c], circles as {center, radius}. Absent values are null.

Json to_json(const Rat& r);
Json to_json(const Point& p);
Json to_json(const Line& l);
Json to_json(const Circle& c);

/// {d, e, case, crease, points, lengths, circles, foldable}
Json config_json(const HagaConfig& cfg);

/// {d, e, case, checks: [{id, status, witness?, note?}]}
Json report_json(const VerificationReport& report);

}  // namespace haga
