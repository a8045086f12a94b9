#include "scm/query.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "scm/anchoring.hpp"
#include "scm/error.hpp"

namespace scm {

namespace {

const ObjectInstance& require_object(const ModelInstance& model,
                                     const std::string& uuid) {
    const ObjectInstance* obj = model.find_object(uuid);
    if (!obj) throw Error("UNKNOWN_OBJECT", "no object with uuid " + uuid);
    return *obj;
}

std::optional<CoordinateValue> object_position(const ObjectInstance& obj) {
    auto it = obj.values.find(builtin::kCoordPosition);
    if (it == obj.values.end() || it->second.empty()) return std::nullopt;
    if (auto* c = std::get_if<CoordinateValue>(&it->second.front())) return *c;
    return std::nullopt;
}

std::optional<ExtentBox> object_extent(const ObjectInstance& obj) {
    auto it = obj.values.find(builtin::kVizrepExtent);
    if (it == obj.values.end() || it->second.empty()) return std::nullopt;
    if (auto* e = std::get_if<ExtentBox>(&it->second.front())) return *e;
    return std::nullopt;
}

} // namespace

Aabb world_aabb(const ModelInstance& model, const FrameTree& tree,
                const std::string& uuid) {
    const ObjectInstance& obj = require_object(model, uuid);
    auto pos = object_position(obj);
    if (!pos) throw Error("NO_POSITION", "object has no position: " + uuid);
    Pose world = object_world_pose(obj, tree);
    auto extent = object_extent(obj);
    if (!extent) {
        Vec3 p = world.translation;
        return {p, p};
    }
    // enclose the 8 transformed corners
    Aabb box{{1e300, 1e300, 1e300}, {-1e300, -1e300, -1e300}};
    for (int i = 0; i < 8; ++i) {
        Vec3 corner{
            extent->center.x + (i & 1 ? 1 : -1) * extent->half_sizes.x,
            extent->center.y + (i & 2 ? 1 : -1) * extent->half_sizes.y,
            extent->center.z + (i & 4 ? 1 : -1) * extent->half_sizes.z};
        Vec3 w = world.apply(corner);
        box.min = {std::min(box.min.x, w.x), std::min(box.min.y, w.y),
                   std::min(box.min.z, w.z)};
        box.max = {std::max(box.max.x, w.x), std::max(box.max.y, w.y),
                   std::max(box.max.z, w.z)};
    }
    return box;
}

double aabb_distance(const Aabb& a, const Aabb& b) {
    auto gap = [](double amin, double amax, double bmin, double bmax) {
        return std::max(0.0, std::max(bmin - amax, amin - bmax));
    };
    double gx = gap(a.min.x, a.max.x, b.min.x, b.max.x);
    double gy = gap(a.min.y, a.max.y, b.min.y, b.max.y);
    double gz = gap(a.min.z, a.max.z, b.min.z, b.max.z);
    return std::sqrt(gx * gx + gy * gy + gz * gz);
}

bool is_at(const ModelInstance& model, const FrameTree& tree,
           const std::string& a, const std::string& b, double tolerance) {
    return aabb_distance(world_aabb(model, tree, a),
                         world_aabb(model, tree, b)) <= tolerance;
}

bool is_in(const ModelInstance& model, const FrameTree& tree,
           const std::string& a, const std::string& b) {
    const ObjectInstance& outer = require_object(model, b);
    if (!object_extent(outer))
        throw Error("NO_EXTENT", "containing object has no extent: " + b);
    Aabb inner = world_aabb(model, tree, a);
    Aabb box = world_aabb(model, tree, b);
    return inner.min.x >= box.min.x && inner.max.x <= box.max.x &&
           inner.min.y >= box.min.y && inner.max.y <= box.max.y &&
           inner.min.z >= box.min.z && inner.max.z <= box.max.z;
}

std::vector<std::string> within_radius(const ModelInstance& model,
                                       const FrameTree& tree,
                                       const CoordinateValue& center,
                                       double r) {
    Vec3 c = tree.resolve(center.position, center.frame, FrameTree::kWorld);
    std::vector<std::string> out;
    for (const auto& obj : model.objects) {
        auto pos = object_position(obj);
        if (!pos) continue;
        Vec3 p = tree.resolve(pos->position, pos->frame, FrameTree::kWorld);
        if ((p - c).norm() <= r) out.push_back(obj.uuid);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PathResult> shortest_path(const ModelInstance& model,
                                        const Metamodel& mm,
                                        const FrameTree& tree,
                                        const std::string& source,
                                        const std::string& target,
                                        const std::string& weight) {
    require_object(model, source);
    require_object(model, target);

    auto node_position = [&](const std::string& uuid) {
        auto pos = object_position(require_object(model, uuid));
        if (!pos) throw Error("NO_POSITION", "node has no position: " + uuid);
        return tree.resolve(pos->position, pos->frame, FrameTree::kWorld);
    };

    // undirected adjacency from edge-kind objects
    std::map<std::string, std::vector<std::pair<std::string, double>>> adj;
    for (const auto& obj : model.objects) {
        const ObjectType* ot = mm.find_object_type(obj.object_type);
        if (!ot || ot->kind != ObjectKind::Edge) continue;
        auto ref = [&](const char* attr) -> std::string {
            auto it = obj.values.find(attr);
            if (it == obj.values.end() || it->second.empty()) return {};
            auto* r = std::get_if<ObjectRef>(&it->second.front());
            return r ? r->uuid : std::string{};
        };
        std::string u = ref(builtin::kRelSource);
        std::string v = ref(builtin::kRelTarget);
        if (u.empty() || v.empty()) continue;
        double w;
        if (weight == "euclidean") {
            w = (node_position(u) - node_position(v)).norm();
        } else {
            auto it = obj.values.find(weight);
            if (it == obj.values.end() || it->second.empty())
                throw Error("UNKNOWN_ATTRIBUTE",
                            "edge " + obj.uuid + " lacks weight attribute " +
                                weight);
            const Value& val = it->second.front();
            if (auto* d = std::get_if<double>(&val)) w = *d;
            else if (auto* i = std::get_if<std::int64_t>(&val)) w = (double)*i;
            else
                throw Error("RANGE_TYPE_MISMATCH",
                            "weight attribute is not numeric");
        }
        if (w < 0)
            throw Error("NEGATIVE_WEIGHT",
                        "edge " + obj.uuid + " has negative weight");
        adj[u].push_back({v, w});
        adj[v].push_back({u, w});
    }

    // Dijkstra with lexicographic tie-breaking on the path sequence
    struct Label {
        double dist;
        std::vector<std::string> path;
    };
    auto better = [](double d1, const std::vector<std::string>& p1, double d2,
                     const std::vector<std::string>& p2) {
        if (d1 != d2) return d1 < d2;
        return p1 < p2;
    };
    std::map<std::string, Label> best;
    using QueueItem = std::pair<double, std::vector<std::string>>;
    auto cmp = [](const QueueItem& a, const QueueItem& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<QueueItem, std::vector<QueueItem>, decltype(cmp)> queue(cmp);
    queue.push({0.0, {source}});
    best[source] = {0.0, {source}};
    while (!queue.empty()) {
        auto [dist, path] = queue.top();
        queue.pop();
        const std::string& node = path.back();
        auto bit = best.find(node);
        if (bit != best.end() &&
            better(bit->second.dist, bit->second.path, dist, path))
            continue;
        auto ait = adj.find(node);
        if (ait == adj.end()) continue;
        for (const auto& [next, w] : ait->second) {
            double nd = dist + w;
            std::vector<std::string> np = path;
            np.push_back(next);
            auto nit = best.find(next);
            if (nit == best.end() ||
                better(nd, np, nit->second.dist, nit->second.path)) {
                best[next] = {nd, np};
                queue.push({nd, std::move(np)});
            }
        }
    }
    auto it = best.find(target);
    if (it == best.end()) return std::nullopt;
    return PathResult{it->second.path, it->second.dist};
}

} // namespace scm
