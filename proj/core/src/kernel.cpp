#include "scm/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "scm/error.hpp"

namespace scm {

bool is_relational(ObjectKind k) {
    return k == ObjectKind::Anchor || k == ObjectKind::Edge ||
           k == ObjectKind::TemporalRelation || k == ObjectKind::Participation;
}

const ObjectType* Metamodel::find_object_type(const Id& id) const {
    for (const auto& mt : model_types)
        for (const auto& ot : mt.object_types)
            if (ot.id == id) return &ot;
    return nullptr;
}

const ModelType* Metamodel::find_model_type(const Id& id) const {
    for (const auto& mt : model_types)
        if (mt.id == id) return &mt;
    return nullptr;
}

const DataType* Metamodel::find_data_type(const Id& id) const {
    for (const auto& mt : model_types)
        for (const auto& dt : mt.data_types)
            if (dt.id == id) return &dt;
    return nullptr;
}

const Attribute* Metamodel::find_attribute(const Id& id) const {
    for (const auto& mt : model_types)
        for (const auto& a : mt.attributes)
            if (a.id == id) return &a;
    return nullptr;
}

const BuiltinAttributeSets& BuiltinAttributeSets::instance() {
    static const BuiltinAttributeSets sets{
        builtin::kUuid,
        {builtin::kCoordPosition},
        {builtin::kTransformRotation, builtin::kTransformScale},
        {builtin::kVizrepAsset, builtin::kVizrepExtent, builtin::kVizrepLod},
        {builtin::kFieldSpec},
        {builtin::kEventStart, builtin::kEventDuration}};
    return sets;
}

std::vector<Id> BuiltinAttributeSets::universal() const {
    std::vector<Id> ids{uuid};
    ids.insert(ids.end(), coord.begin(), coord.end());
    ids.insert(ids.end(), transform.begin(), transform.end());
    ids.insert(ids.end(), vizrep.begin(), vizrep.end());
    return ids;
}

namespace {

struct BuiltinDef {
    const char* id;
    const char* name;
    RangeSpec range;
    Cardinality card;
};

RangeSpec data_range(DataKind k) {
    RangeSpec r;
    r.kind = RangeSpec::Kind::Builtin;
    r.builtin = k;
    return r;
}

const std::vector<BuiltinDef>& universal_builtin_defs() {
    static const std::vector<BuiltinDef> defs{
        {builtin::kUuid, "UUID", data_range(DataKind::Text), {1, 1}},
        {builtin::kCoordPosition, "Position",
         data_range(DataKind::CoordinateTriple), {0, 1}},
        {builtin::kTransformRotation, "Rotation", data_range(DataKind::Rotation),
         {0, 1}},
        {builtin::kTransformScale, "Scale", data_range(DataKind::Real), {0, 1}},
        {builtin::kVizrepAsset, "Representation asset",
         data_range(DataKind::Text), {0, 1}},
        {builtin::kVizrepExtent, "Extent", data_range(DataKind::ExtentBox),
         {0, 1}},
        {builtin::kVizrepLod, "Level of detail", data_range(DataKind::Integer),
         {0, 1}},
    };
    return defs;
}

const std::vector<BuiltinDef>& kind_builtin_defs() {
    static const std::vector<BuiltinDef> defs{
        {builtin::kFieldSpec, "Field definition",
         data_range(DataKind::FieldSpecKind), {0, 1}},
        {builtin::kEventStart, "Start", data_range(DataKind::Timestamp), {0, 1}},
        {builtin::kEventDuration, "Duration", data_range(DataKind::Duration),
         {0, 1}},
        {builtin::kRelSource, "Source",
         {RangeSpec::Kind::EndpointSource, DataKind::Text, ""}, {1, 1}},
        {builtin::kRelTarget, "Target",
         {RangeSpec::Kind::EndpointTarget, DataKind::Text, ""}, {1, 1}},
        {builtin::kAnchorCondition, "Condition", data_range(DataKind::Text),
         {0, 1}},
        {builtin::kTemporalRelation, "Relation", data_range(DataKind::Text),
         {1, 1}},
        {builtin::kParticipationRole, "Role", data_range(DataKind::Text),
         {0, 1}},
    };
    return defs;
}

bool builtin_applies(const std::string& attr_id, ObjectKind kind) {
    if (attr_id == builtin::kFieldSpec) return kind == ObjectKind::Field;
    if (attr_id == builtin::kEventStart || attr_id == builtin::kEventDuration)
        return kind == ObjectKind::Event;
    if (attr_id == builtin::kRelSource || attr_id == builtin::kRelTarget)
        return is_relational(kind);
    if (attr_id == builtin::kAnchorCondition) return kind == ObjectKind::Anchor;
    if (attr_id == builtin::kTemporalRelation)
        return kind == ObjectKind::TemporalRelation;
    if (attr_id == builtin::kParticipationRole)
        return kind == ObjectKind::Participation;
    return true; // universal
}

bool is_builtin_id(const Id& id) {
    for (const auto& d : universal_builtin_defs())
        if (id == d.id) return true;
    for (const auto& d : kind_builtin_defs())
        if (id == d.id) return true;
    return false;
}

// supertype closure of t, including t itself
std::set<Id> supertype_closure(const Metamodel& mm, const Id& t) {
    std::set<Id> closure{t};
    std::vector<Id> work{t};
    while (!work.empty()) {
        Id cur = work.back();
        work.pop_back();
        for (const auto& [sub, super] : mm.inheritance)
            if (sub == cur && closure.insert(super).second)
                work.push_back(super);
    }
    return closure;
}

} // namespace

void attach_builtins(Metamodel& mm) {
    for (auto& mt : mm.model_types) {
        auto ensure_attr = [&](const BuiltinDef& def) {
            auto it = std::find_if(mt.attributes.begin(), mt.attributes.end(),
                                   [&](const Attribute& a) { return a.id == def.id; });
            if (it == mt.attributes.end())
                mt.attributes.push_back({def.id, def.name, true});
            mm.range_map[def.id] = def.range;
            mm.card_map[def.id] = def.card;
        };
        for (const auto& def : universal_builtin_defs()) {
            ensure_attr(def);
            for (const auto& ot : mt.object_types)
                mm.domain_map[def.id].insert(ot.id);
        }
        for (const auto& def : kind_builtin_defs()) {
            bool any = false;
            for (const auto& ot : mt.object_types) {
                if (builtin_applies(def.id, ot.kind)) {
                    mm.domain_map[def.id].insert(ot.id);
                    any = true;
                }
            }
            if (any) ensure_attr(def);
        }
    }
}

ValidationReport validate_metamodel(const Metamodel& mm) {
    ValidationReport report;
    auto add = [&](const char* code, const std::string& loc,
                   const std::string& msg) {
        report.push_back({code, loc, msg});
    };

    // id uniqueness (builtin attributes may repeat across model types)
    std::set<Id> mt_ids, ot_ids, dt_ids, attr_ids;
    for (const auto& mt : mm.model_types) {
        if (!mt_ids.insert(mt.id).second)
            add("DUPLICATE_ID", mt.id, "duplicate model type id");
        for (const auto& ot : mt.object_types)
            if (!ot_ids.insert(ot.id).second)
                add("DUPLICATE_ID", ot.id, "object type id appears in more than one place");
        for (const auto& dt : mt.data_types) {
            if (!dt_ids.insert(dt.id).second)
                add("DUPLICATE_ID", dt.id, "duplicate data type id");
            if (dt.kind == DataKind::Enumeration) {
                std::set<std::string> vals(dt.enum_values.begin(),
                                           dt.enum_values.end());
                if (vals.empty() || vals.size() != dt.enum_values.size())
                    add("BAD_ENUM", dt.id,
                        "enumeration needs at least one distinct value");
            }
        }
        for (const auto& a : mt.attributes) {
            if (!attr_ids.insert(a.id).second && !a.builtin)
                add("DUPLICATE_ID", a.id, "duplicate attribute id");
        }
    }

    // inheritance: known endpoints, no cycle among distinct types
    std::map<Id, std::vector<Id>> succ;
    for (const auto& [a, b] : mm.inheritance) {
        if (!ot_ids.count(a))
            add("UNKNOWN_TYPE", a, "inheritance references unknown object type");
        if (!ot_ids.count(b))
            add("UNKNOWN_TYPE", b, "inheritance references unknown object type");
        if (a != b) succ[a].push_back(b);
    }
    {
        std::map<Id, int> state; // 0 unseen, 1 on stack, 2 done
        bool cycle = false;
        std::function<void(const Id&)> dfs = [&](const Id& n) {
            state[n] = 1;
            for (const auto& m : succ[n]) {
                if (state[m] == 1) cycle = true;
                else if (state[m] == 0) dfs(m);
            }
            state[n] = 2;
        };
        for (const auto& [n, _] : succ)
            if (state[n] == 0) dfs(n);
        if (cycle)
            add("INHERITANCE_CYCLE", "inheritance",
                "inheritance relation contains a cycle among distinct types");
    }

    // every attribute has resolvable domain, range, card
    for (const Id& attr : attr_ids) {
        auto dit = mm.domain_map.find(attr);
        if (dit == mm.domain_map.end() || dit->second.empty()) {
            add("DANGLING_DOMAIN", attr, "attribute has no domain entry");
        } else {
            for (const Id& t : dit->second)
                if (!ot_ids.count(t))
                    add("DANGLING_DOMAIN", attr,
                        "domain references unknown object type: " + t);
        }
        auto rit = mm.range_map.find(attr);
        if (rit == mm.range_map.end()) {
            add("DANGLING_RANGE", attr, "attribute has no range entry");
        } else {
            const RangeSpec& r = rit->second;
            if (r.kind == RangeSpec::Kind::DataTypeId && !dt_ids.count(r.ref))
                add("DANGLING_RANGE", attr, "range references unknown data type: " + r.ref);
            if (r.kind == RangeSpec::Kind::ObjectTypeId && !ot_ids.count(r.ref))
                add("DANGLING_RANGE", attr, "range references unknown object type: " + r.ref);
            if (r.kind == RangeSpec::Kind::ModelTypeId && !mt_ids.count(r.ref))
                add("DANGLING_RANGE", attr, "range references unknown model type: " + r.ref);
        }
        auto cit = mm.card_map.find(attr);
        if (cit == mm.card_map.end())
            add("BAD_CARD", attr, "attribute has no cardinality entry");
        else if (cit->second.max && cit->second.min > *cit->second.max)
            add("BAD_CARD", attr, "cardinality min exceeds max");
    }
    for (const auto& [attr, _] : mm.domain_map)
        if (!attr_ids.count(attr))
            add("UNKNOWN_ATTRIBUTE", attr, "domain entry for undeclared attribute");

    // kind rules
    for (const auto& mt : mm.model_types) {
        for (const auto& ot : mt.object_types) {
            if (is_relational(ot.kind) && !ot.endpoints)
                add("KIND_CONFLICT", ot.id,
                    "relational object type without endpoint spec");
            if (!is_relational(ot.kind) && ot.endpoints)
                add("KIND_CONFLICT", ot.id,
                    "endpoint spec on non-relational object type");
            if (ot.kind == ObjectKind::Anchor && ot.endpoints) {
                for (ObjectKind k : ot.endpoints->source_kinds)
                    if (k != ObjectKind::Virtual)
                        add("KIND_CONFLICT", ot.id,
                            "anchor source kinds must be virtual");
                for (ObjectKind k : ot.endpoints->target_kinds)
                    if (k != ObjectKind::Real)
                        add("KIND_CONFLICT", ot.id,
                            "anchor target kinds must be real");
            }
        }
    }
    // field attributes only on field kinds
    for (const Id& fattr : BuiltinAttributeSets::instance().field_attrs) {
        auto dit = mm.domain_map.find(fattr);
        if (dit == mm.domain_map.end()) continue;
        for (const Id& t : dit->second) {
            const ObjectType* ot = mm.find_object_type(t);
            if (ot && ot->kind != ObjectKind::Field)
                add("KIND_CONFLICT", fattr,
                    "field attribute attached to non-field type: " + t);
        }
    }

    // universal builtins reach every object type
    for (const Id& uattr : BuiltinAttributeSets::instance().universal()) {
        auto dit = mm.domain_map.find(uattr);
        for (const Id& t : ot_ids) {
            if (dit == mm.domain_map.end() || !dit->second.count(t))
                add("MISSING_BUILTIN", t,
                    "object type lacks builtin attribute " + uattr);
        }
    }
    return report;
}

bool subtype_of(const Metamodel& mm, const Id& a, const Id& b) {
    if (!mm.find_object_type(a))
        throw Error("UNKNOWN_TYPE", "unknown object type: " + a);
    if (!mm.find_object_type(b))
        throw Error("UNKNOWN_TYPE", "unknown object type: " + b);
    return supertype_closure(mm, a).count(b) != 0;
}

std::set<Id> effective_attributes(const Metamodel& mm, const Id& t) {
    const ObjectType* ot = mm.find_object_type(t);
    if (!ot) throw Error("UNKNOWN_TYPE", "unknown object type: " + t);
    std::set<Id> closure = supertype_closure(mm, t);
    std::set<Id> attrs;
    for (const auto& [attr, domain] : mm.domain_map)
        for (const Id& d : domain)
            if (closure.count(d)) {
                attrs.insert(attr);
                break;
            }
    return attrs;
}

ObjectInstance* ModelInstance::find_object(const std::string& uuid) {
    for (auto& o : objects)
        if (o.uuid == uuid) return &o;
    return nullptr;
}

const ObjectInstance* ModelInstance::find_object(const std::string& uuid) const {
    for (const auto& o : objects)
        if (o.uuid == uuid) return &o;
    return nullptr;
}

namespace {

const ObjectType* require_type(const Metamodel& mm, const Id& t) {
    const ObjectType* ot = mm.find_object_type(t);
    if (!ot) throw Error("UNKNOWN_TYPE", "unknown object type: " + t);
    return ot;
}

ObjectInstance& add_object(ModelInstance& model, const Id& t) {
    ObjectInstance obj;
    obj.uuid = generate_uuid();
    obj.object_type = t;
    obj.values[builtin::kUuid] = {Value{obj.uuid}};
    model.objects.push_back(std::move(obj));
    return model.objects.back();
}

bool value_matches_kind(const Metamodel& mm, DataKind kind, const Value& v,
                        const std::vector<std::string>* enum_values) {
    switch (kind) {
    case DataKind::Text: return std::holds_alternative<std::string>(v);
    case DataKind::Integer: return std::holds_alternative<std::int64_t>(v);
    case DataKind::Real:
        return std::holds_alternative<double>(v) ||
               std::holds_alternative<std::int64_t>(v);
    case DataKind::Boolean: return std::holds_alternative<bool>(v);
    case DataKind::Enumeration: {
        auto* s = std::get_if<std::string>(&v);
        if (!s || !enum_values) return false;
        return std::find(enum_values->begin(), enum_values->end(), *s) !=
               enum_values->end();
    }
    case DataKind::Timestamp: return std::holds_alternative<Timestamp>(v);
    case DataKind::Duration: {
        auto* d = std::get_if<Duration>(&v);
        return d && d->seconds >= 0;
    }
    case DataKind::CoordinateTriple:
        return std::holds_alternative<CoordinateValue>(v);
    case DataKind::Rotation: return std::holds_alternative<Quaternion>(v);
    case DataKind::ExtentBox: {
        auto* e = std::get_if<ExtentBox>(&v);
        return e && e->half_sizes.x > 0 && e->half_sizes.y > 0 &&
               e->half_sizes.z > 0;
    }
    case DataKind::FieldSpecKind: return std::holds_alternative<FieldSpec>(v);
    }
    return false;
}

bool value_matches_range(const Metamodel& mm, const RangeSpec& range,
                         const Value& v) {
    switch (range.kind) {
    case RangeSpec::Kind::Builtin:
        return value_matches_kind(mm, range.builtin, v, nullptr);
    case RangeSpec::Kind::DataTypeId: {
        const DataType* dt = mm.find_data_type(range.ref);
        return dt && value_matches_kind(mm, dt->kind, v, &dt->enum_values);
    }
    case RangeSpec::Kind::ObjectTypeId:
        return std::holds_alternative<ObjectRef>(v);
    case RangeSpec::Kind::ModelTypeId:
        return std::holds_alternative<ModelRef>(v);
    case RangeSpec::Kind::EndpointSource: {
        if (std::holds_alternative<ObjectRef>(v)) return true;
        auto* s = std::get_if<std::string>(&v);
        return s && *s == builtin::kModelToken;
    }
    case RangeSpec::Kind::EndpointTarget:
        return std::holds_alternative<ObjectRef>(v) ||
               std::holds_alternative<PoseValue>(v);
    }
    return false;
}

} // namespace

ObjectInstance& create_object(ModelInstance& model, const Metamodel& mm,
                              const Id& t) {
    const ObjectType* ot = require_type(mm, t);
    if (is_relational(ot->kind))
        throw Error("KIND_MISMATCH",
                    "relational type requires endpoints: " + t);
    return add_object(model, t);
}

ObjectInstance& create_object(ModelInstance& model, const Metamodel& mm,
                              const Id& t, const Value& source,
                              const Value& target) {
    const ObjectType* ot = require_type(mm, t);
    if (!is_relational(ot->kind))
        throw Error("KIND_MISMATCH",
                    "endpoints supplied for non-relational type: " + t);
    ObjectInstance& obj = add_object(model, t);
    obj.values[builtin::kRelSource] = {source};
    obj.values[builtin::kRelTarget] = {target};
    return obj;
}

void set_value(ModelInstance& model, const Metamodel& mm,
               const std::string& uuid, const Id& attr,
               std::vector<Value> values) {
    ObjectInstance* obj = model.find_object(uuid);
    if (!obj) throw Error("UNKNOWN_OBJECT", "no object with uuid " + uuid);
    if (attr == builtin::kUuid)
        throw Error("UNKNOWN_ATTRIBUTE", "uuid is immutable");
    std::set<Id> attrs = effective_attributes(mm, obj->object_type);
    if (!attrs.count(attr))
        throw Error("UNKNOWN_ATTRIBUTE",
                    "attribute " + attr + " not applicable to type " +
                        obj->object_type);
    const RangeSpec& range = mm.range_map.at(attr);
    for (const Value& v : values)
        if (!value_matches_range(mm, range, v))
            throw Error("RANGE_TYPE_MISMATCH",
                        "value does not match range of attribute " + attr);
    obj->values[attr] = std::move(values);
}

void delete_object(ModelInstance& model, const std::string& uuid) {
    auto it = std::find_if(model.objects.begin(), model.objects.end(),
                           [&](const ObjectInstance& o) { return o.uuid == uuid; });
    if (it == model.objects.end())
        throw Error("UNKNOWN_OBJECT", "no object with uuid " + uuid);
    model.objects.erase(it);
}

std::vector<const ObjectInstance*>
iterate_objects(const ModelInstance& model, const Metamodel& mm,
                const std::optional<Id>& filter, bool include_subtypes) {
    if (filter) require_type(mm, *filter);
    std::vector<const ObjectInstance*> out;
    for (const auto& o : model.objects) {
        if (filter) {
            if (include_subtypes) {
                if (!mm.find_object_type(o.object_type) ||
                    !subtype_of(mm, o.object_type, *filter))
                    continue;
            } else if (o.object_type != *filter) {
                continue;
            }
        }
        out.push_back(&o);
    }
    std::sort(out.begin(), out.end(),
              [](const ObjectInstance* a, const ObjectInstance* b) {
                  return a->uuid < b->uuid;
              });
    return out;
}

ConformanceReport validate_model(const ModelInstance& model,
                                 const Metamodel& mm) {
    if (!validate_metamodel(mm).empty())
        throw Error("INVALID_METAMODEL",
                    "metamodel does not validate; fix it first");
    ConformanceReport report;
    auto add = [&](const char* code, const std::string& loc,
                   const std::string& msg) {
        report.push_back({code, loc, msg});
    };

    const ModelType* mt = mm.find_model_type(model.model_type);
    if (!mt) {
        add("UNKNOWN_TYPE", model.model_type, "unknown model type");
        return report;
    }

    std::set<std::string> uuids;
    for (const auto& obj : model.objects)
        if (!uuids.insert(obj.uuid).second)
            add("DUPLICATE_UUID", obj.uuid, "uuid used by more than one object");

    auto declared_in_model_type = [&](const Id& t) {
        for (const auto& ot : mt->object_types)
            if (subtype_of(mm, t, ot.id)) return true;
        return false;
    };

    for (const auto& obj : model.objects) {
        const ObjectType* ot = mm.find_object_type(obj.object_type);
        if (!ot) {
            add("UNKNOWN_TYPE", obj.uuid,
                "object has unknown type " + obj.object_type);
            continue;
        }
        if (!declared_in_model_type(obj.object_type))
            add("UNKNOWN_TYPE", obj.uuid,
                "type " + obj.object_type + " is not part of model type " +
                    mt->id);

        std::set<Id> attrs = effective_attributes(mm, obj.object_type);
        for (const auto& [attr, values] : obj.values) {
            if (!attrs.count(attr)) {
                add("UNKNOWN_ATTRIBUTE", obj.uuid,
                    "attribute " + attr + " not applicable");
                continue;
            }
            const RangeSpec& range = mm.range_map.at(attr);
            for (const Value& v : values) {
                if (!value_matches_range(mm, range, v)) {
                    add("RANGE_TYPE_MISMATCH", obj.uuid,
                        "value does not match range of " + attr);
                    continue;
                }
                if (auto* ref = std::get_if<ObjectRef>(&v)) {
                    const ObjectInstance* other = model.find_object(ref->uuid);
                    if (!other) {
                        add("DANGLING_REFERENCE", obj.uuid,
                            attr + " references missing object " + ref->uuid);
                    } else if (range.kind == RangeSpec::Kind::ObjectTypeId &&
                               mm.find_object_type(other->object_type) &&
                               !subtype_of(mm, other->object_type, range.ref)) {
                        add("RANGE_TYPE_MISMATCH", obj.uuid,
                            attr + " references object of incompatible type");
                    }
                }
                if (auto* mref = std::get_if<ModelRef>(&v)) {
                    if (!model.known_models.count(mref->model_id) &&
                        mref->model_id != model.id)
                        add("DANGLING_REFERENCE", obj.uuid,
                            attr + " references unknown model " + mref->model_id);
                }
            }
        }
        // cardinality over all effective attributes
        for (const Id& attr : attrs) {
            const Cardinality& card = mm.card_map.at(attr);
            auto vit = obj.values.find(attr);
            std::size_t n = vit == obj.values.end() ? 0 : vit->second.size();
            if (n < card.min)
                add("MISSING_VALUE", obj.uuid,
                    "attribute " + attr + " has " + std::to_string(n) +
                        " values, minimum is " + std::to_string(card.min));
            else if (card.max && n > *card.max)
                add("CARD_VIOLATION", obj.uuid,
                    "attribute " + attr + " has " + std::to_string(n) +
                        " values, maximum is " + std::to_string(*card.max));
        }
        // identity
        auto uit = obj.values.find(builtin::kUuid);
        if (uit != obj.values.end() && uit->second.size() == 1) {
            auto* s = std::get_if<std::string>(&uit->second.front());
            if (!s || *s != obj.uuid)
                add("UUID_MISMATCH", obj.uuid,
                    "uuid attribute does not match object identity");
        }
        // endpoint kinds
        if (is_relational(ot->kind)) {
            auto endpoint_obj = [&](const char* attr) -> const ObjectInstance* {
                auto it = obj.values.find(attr);
                if (it == obj.values.end() || it->second.size() != 1)
                    return nullptr;
                auto* ref = std::get_if<ObjectRef>(&it->second.front());
                return ref ? model.find_object(ref->uuid) : nullptr;
            };
            auto endpoint_is = [&](const char* attr, ObjectKind want) {
                const ObjectInstance* e = endpoint_obj(attr);
                if (!e) return; // absence handled by card / dangling checks
                const ObjectType* et = mm.find_object_type(e->object_type);
                if (et && et->kind != want)
                    add("ENDPOINT_KIND", obj.uuid,
                        std::string(attr) + " has wrong object kind");
            };
            if (ot->kind != ObjectKind::Anchor) {
                // MODEL sources and pose targets are anchor-only forms
                auto it = obj.values.find(builtin::kRelSource);
                if (it != obj.values.end())
                    for (const Value& v : it->second)
                        if (auto* s = std::get_if<std::string>(&v);
                            s && *s == builtin::kModelToken)
                            add("ENDPOINT_KIND", obj.uuid,
                                "MODEL source on non-anchor relation");
                it = obj.values.find(builtin::kRelTarget);
                if (it != obj.values.end())
                    for (const Value& v : it->second)
                        if (std::holds_alternative<PoseValue>(v))
                            add("ENDPOINT_KIND", obj.uuid,
                                "pose target on non-anchor relation");
            }
            switch (ot->kind) {
            case ObjectKind::Anchor:
                endpoint_is(builtin::kRelSource, ObjectKind::Virtual);
                endpoint_is(builtin::kRelTarget, ObjectKind::Real);
                break;
            case ObjectKind::Edge:
                endpoint_is(builtin::kRelSource, ObjectKind::Node);
                endpoint_is(builtin::kRelTarget, ObjectKind::Node);
                break;
            case ObjectKind::TemporalRelation:
                endpoint_is(builtin::kRelSource, ObjectKind::Event);
                endpoint_is(builtin::kRelTarget, ObjectKind::Event);
                break;
            case ObjectKind::Participation:
                endpoint_is(builtin::kRelSource, ObjectKind::Event);
                break;
            default:
                break;
            }
        }
    }
    return report;
}

} // namespace scm
