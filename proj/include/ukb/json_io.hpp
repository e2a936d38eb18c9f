// json_io.hpp — JSON views of the core value types. Key order is fixed so
// output is byte-stable across runs.

#ifndef UKB_JSON_IO_HPP
#define UKB_JSON_IO_HPP

#include <json.hpp>

#include "ukb/granule.hpp"
#include "ukb/mc.hpp"

namespace ukb {

using Json = nlohmann::ordered_json;

Json universe_to_json(const Universe& u);
Json granule_to_json(const Granule& g);
Json report_to_json(const BoundsReport& r);

}  // namespace ukb

#endif
