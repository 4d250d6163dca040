#pragma once

namespace qpb {

// Bundled topology documents, identical to data/topologies/*.json.
extern const char* const kEagleTopologyJson;
extern const char* const kHeronTopologyJson;

}  // namespace qpb
