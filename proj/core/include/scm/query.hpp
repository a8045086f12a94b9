#ifndef SCM_QUERY_HPP
#define SCM_QUERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "scm/geometry.hpp"
#include "scm/kernel.hpp"

namespace scm {

// World-frame axis-aligned bounding volume. Degenerate (point) when the
// object has no extent.
struct Aabb {
    Vec3 min;
    Vec3 max;
};

// Conservative world AABB of the object's extent (rotated extents are
// enclosed). Throws UNKNOWN_OBJECT, NO_POSITION.
Aabb world_aabb(const ModelInstance& model, const FrameTree& tree,
                const std::string& uuid);

// Per-axis gap distance between two AABBs.
double aabb_distance(const Aabb& a, const Aabb& b);

// Contact test: AABB distance <= tolerance.
// Throws UNKNOWN_OBJECT, NO_POSITION.
bool is_at(const ModelInstance& model, const FrameTree& tree,
           const std::string& a, const std::string& b, double tolerance);

// Closed containment of a's AABB in b's. Throws UNKNOWN_OBJECT, NO_EXTENT.
bool is_in(const ModelInstance& model, const FrameTree& tree,
           const std::string& a, const std::string& b);

// Uuids of all objects whose resolved position lies within r of center,
// sorted. Objects without a position are skipped.
std::vector<std::string> within_radius(const ModelInstance& model,
                                       const FrameTree& tree,
                                       const CoordinateValue& center, double r);

struct PathResult {
    std::vector<std::string> path; // node uuids, source first
    double length = 0;
};

// Minimal-weight path over node/edge objects; ties broken by smallest uuid
// sequence. Weight comes from an edge attribute, or "euclidean" for node
// distance. Returns nullopt when disconnected.
// Throws UNKNOWN_OBJECT, NEGATIVE_WEIGHT.
std::optional<PathResult> shortest_path(const ModelInstance& model,
                                        const Metamodel& mm,
                                        const FrameTree& tree,
                                        const std::string& source,
                                        const std::string& target,
                                        const std::string& weight);

} // namespace scm

#endif
