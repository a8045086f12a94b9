#ifndef SCM_ANCHORING_HPP
#define SCM_ANCHORING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scm/expr.hpp"
#include "scm/geometry.hpp"
#include "scm/kernel.hpp"

namespace scm {

// Anchoring levels: 0 none, 1 spatialized, 2 model-anchored, 3 element-
// anchored, 4 dynamic. First matching level, highest first.
enum class AnchoringLevel { L0 = 0, L1, L2, L3, L4 };

struct Placement {
    std::string source; // uuid of the placed virtual object
    Pose pose;          // in world coordinates
    std::map<Id, std::vector<Value>> vizrep; // echoed vizrep attribute values
};

// The object's pose from its own coord/transform attributes, without frame
// resolution.
Pose object_local_pose(const ObjectInstance& obj);

// Local pose mapped through the coordinate's frame into world.
// Throws UNKNOWN_FRAME.
Pose object_world_pose(const ObjectInstance& obj, const FrameTree& tree);

// Throws Error(INVALID_MODEL) when the model does not conform to mm.
AnchoringLevel classify_anchoring_level(const ModelInstance& model,
                                        const Metamodel& mm);

// Adds an anchor object of the metamodel's anchor-kind type. `source` is a
// virtual object's uuid or the reserved MODEL token; `target` a real
// object's uuid or a point-of-interest pose.
// Throws ENDPOINT_KIND, expr::ParseError, UNKNOWN_OBJECT.
ObjectInstance& create_anchor(ModelInstance& model, const Metamodel& mm,
                              const std::string& source,
                              const std::variant<std::string, PoseValue>& target,
                              const Pose& offset,
                              const std::optional<std::string>& condition = {});

bool evaluate_condition(const expr::Node& condition,
                        const expr::Context& context);

// Placements of all anchors whose condition is absent or true, sorted by
// source uuid. MODEL anchors emit one placement per virtual object.
// Throws INVALID_MODEL, UNKNOWN_VARIABLE (tagged with the anchor uuid),
// UNKNOWN_FRAME.
std::vector<Placement> resolve_scene(const ModelInstance& model,
                                     const Metamodel& mm,
                                     const FrameTree& tree,
                                     const expr::Context& context);

} // namespace scm

#endif
