#include "scm/anchoring.hpp"

#include <algorithm>

#include "scm/error.hpp"

namespace scm {

namespace {

std::optional<std::string> single_text(const ObjectInstance& obj,
                                       const char* attr) {
    auto it = obj.values.find(attr);
    if (it == obj.values.end() || it->second.empty()) return std::nullopt;
    if (auto* s = std::get_if<std::string>(&it->second.front())) return *s;
    return std::nullopt;
}

const Value* single_value(const ObjectInstance& obj, const char* attr) {
    auto it = obj.values.find(attr);
    if (it == obj.values.end() || it->second.empty()) return nullptr;
    return &it->second.front();
}

bool is_kind(const Metamodel& mm, const ObjectInstance& obj, ObjectKind k) {
    const ObjectType* ot = mm.find_object_type(obj.object_type);
    return ot && ot->kind == k;
}

bool has_spatial_value(const ObjectInstance& obj) {
    for (const char* attr :
         {builtin::kCoordPosition, builtin::kTransformRotation,
          builtin::kTransformScale, builtin::kVizrepExtent}) {
        auto it = obj.values.find(attr);
        if (it != obj.values.end() && !it->second.empty()) return true;
    }
    return false;
}

} // namespace

Pose object_local_pose(const ObjectInstance& obj) {
    Pose p = Pose::identity();
    if (const Value* v = single_value(obj, builtin::kTransformRotation))
        if (auto* q = std::get_if<Quaternion>(v))
            p.rotation = q->normalized();
    if (const Value* v = single_value(obj, builtin::kCoordPosition))
        if (auto* c = std::get_if<CoordinateValue>(v))
            p.translation = c->position;
    if (const Value* v = single_value(obj, builtin::kTransformScale)) {
        if (auto* d = std::get_if<double>(v)) p.scale = *d;
        else if (auto* i = std::get_if<std::int64_t>(v)) p.scale = (double)*i;
    }
    return p;
}

Pose object_world_pose(const ObjectInstance& obj, const FrameTree& tree) {
    std::string frame = FrameTree::kWorld;
    if (const Value* v = single_value(obj, builtin::kCoordPosition))
        if (auto* c = std::get_if<CoordinateValue>(v)) frame = c->frame;
    return compose(tree.world_pose(frame), object_local_pose(obj));
}

AnchoringLevel classify_anchoring_level(const ModelInstance& model,
                                        const Metamodel& mm) {
    if (!validate_model(model, mm).empty())
        throw Error("INVALID_MODEL", "model does not conform to its metamodel");
    bool any_conditional = false, any_element = false, any_model = false,
         any_spatial = false;
    for (const auto& obj : model.objects) {
        if (is_kind(mm, obj, ObjectKind::Anchor)) {
            if (single_text(obj, builtin::kAnchorCondition)) any_conditional = true;
            auto src = single_text(obj, builtin::kRelSource);
            const Value* sv = single_value(obj, builtin::kRelSource);
            bool model_level =
                src && *src == builtin::kModelToken &&
                sv && std::holds_alternative<std::string>(*sv);
            if (model_level) any_model = true;
            else any_element = true;
        }
        if (has_spatial_value(obj)) any_spatial = true;
    }
    if (any_conditional) return AnchoringLevel::L4;
    if (any_element) return AnchoringLevel::L3;
    if (any_model) return AnchoringLevel::L2;
    if (any_spatial) return AnchoringLevel::L1;
    return AnchoringLevel::L0;
}

ObjectInstance& create_anchor(ModelInstance& model, const Metamodel& mm,
                              const std::string& source,
                              const std::variant<std::string, PoseValue>& target,
                              const Pose& offset,
                              const std::optional<std::string>& condition) {
    const ObjectType* anchor_type = nullptr;
    for (const auto& mt : mm.model_types)
        for (const auto& ot : mt.object_types)
            if (ot.kind == ObjectKind::Anchor) anchor_type = &ot;
    if (!anchor_type)
        throw Error("UNKNOWN_TYPE", "metamodel declares no anchor object type");

    Value source_value;
    if (source == builtin::kModelToken) {
        source_value = std::string(builtin::kModelToken);
    } else {
        const ObjectInstance* src = model.find_object(source);
        if (!src) throw Error("UNKNOWN_OBJECT", "unknown source object: " + source);
        if (!is_kind(mm, *src, ObjectKind::Virtual))
            throw Error("ENDPOINT_KIND", "anchor source must be virtual");
        source_value = ObjectRef{source};
    }

    Value target_value;
    if (auto* uuid = std::get_if<std::string>(&target)) {
        const ObjectInstance* dst = model.find_object(*uuid);
        if (!dst) throw Error("UNKNOWN_OBJECT", "unknown target object: " + *uuid);
        if (!is_kind(mm, *dst, ObjectKind::Real))
            throw Error("ENDPOINT_KIND", "anchor target must be real");
        target_value = ObjectRef{*uuid};
    } else {
        target_value = std::get<PoseValue>(target);
    }

    if (condition) expr::parse(*condition); // PARSE_ERROR before mutation

    ObjectInstance& obj =
        create_object(model, mm, anchor_type->id, source_value, target_value);
    obj.values[builtin::kCoordPosition] = {
        Value{CoordinateValue{FrameTree::kWorld, offset.translation}}};
    obj.values[builtin::kTransformRotation] = {Value{offset.rotation}};
    obj.values[builtin::kTransformScale] = {Value{offset.scale}};
    if (condition) obj.values[builtin::kAnchorCondition] = {Value{*condition}};
    return obj;
}

bool evaluate_condition(const expr::Node& condition,
                        const expr::Context& context) {
    return expr::evaluate_condition(condition, context);
}

std::vector<Placement> resolve_scene(const ModelInstance& model,
                                     const Metamodel& mm, const FrameTree& tree,
                                     const expr::Context& context) {
    if (!validate_model(model, mm).empty())
        throw Error("INVALID_MODEL", "model does not conform to its metamodel");

    std::vector<Placement> placements;
    auto echo_vizrep = [](const ObjectInstance& obj) {
        std::map<Id, std::vector<Value>> viz;
        for (const char* attr : {builtin::kVizrepAsset, builtin::kVizrepExtent,
                                 builtin::kVizrepLod}) {
            auto it = obj.values.find(attr);
            if (it != obj.values.end() && !it->second.empty())
                viz[attr] = it->second;
        }
        return viz;
    };

    for (const auto& anchor : model.objects) {
        if (!is_kind(mm, anchor, ObjectKind::Anchor)) continue;

        if (auto cond = single_text(anchor, builtin::kAnchorCondition)) {
            expr::NodePtr ast = expr::parse(*cond);
            bool active;
            try {
                active = expr::evaluate_condition(*ast, context);
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " (anchor " +
                                          anchor.uuid + ")");
            }
            if (!active) continue;
        }

        Pose target_world = Pose::identity();
        if (const Value* tv = single_value(anchor, builtin::kRelTarget)) {
            if (auto* ref = std::get_if<ObjectRef>(tv)) {
                const ObjectInstance* t = model.find_object(ref->uuid);
                if (t) target_world = object_world_pose(*t, tree);
            } else if (auto* poi = std::get_if<PoseValue>(tv)) {
                target_world = compose(tree.world_pose(poi->frame), poi->pose);
            }
        }
        Pose anchored = compose(target_world, object_local_pose(anchor));

        auto src = single_text(anchor, builtin::kRelSource);
        if (src && *src == builtin::kModelToken) {
            for (const auto& obj : model.objects) {
                if (!is_kind(mm, obj, ObjectKind::Virtual)) continue;
                placements.push_back({obj.uuid,
                                      compose(anchored, object_local_pose(obj)),
                                      echo_vizrep(obj)});
            }
        } else if (const Value* sv = single_value(anchor, builtin::kRelSource)) {
            if (auto* ref = std::get_if<ObjectRef>(sv)) {
                const ObjectInstance* s = model.find_object(ref->uuid);
                if (s)
                    placements.push_back({s->uuid, anchored, echo_vizrep(*s)});
            }
        }
    }
    std::stable_sort(placements.begin(), placements.end(),
                     [](const Placement& a, const Placement& b) {
                         return a.source < b.source;
                     });
    return placements;
}

} // namespace scm
