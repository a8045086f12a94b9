#ifndef SCM_KERNEL_HPP
#define SCM_KERNEL_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scm/values.hpp"

namespace scm {

using Id = std::string;

enum class DataKind {
    Text,
    Integer,
    Real,
    Boolean,
    Enumeration,
    Timestamp,
    Duration,
    CoordinateTriple,
    Rotation,
    ExtentBox,
    FieldSpecKind,
};

struct DataType {
    Id id;
    DataKind kind = DataKind::Text;
    std::vector<std::string> enum_values; // Enumeration only, >= 1 distinct
};

enum class ObjectKind {
    Virtual,
    Real,
    Anchor,
    Field,
    Event,
    TemporalRelation,
    Participation,
    Node,
    Edge,
};

bool is_relational(ObjectKind k);

// Permitted endpoint kinds for relational object types.
struct EndpointSpec {
    std::set<ObjectKind> source_kinds;
    std::set<ObjectKind> target_kinds;
    bool model_source = false; // anchor may bind the whole model
    bool poi_target = false;   // anchor may target a pose in a frame
};

struct ObjectType {
    Id id;
    std::string name;
    ObjectKind kind = ObjectKind::Virtual;
    std::optional<EndpointSpec> endpoints;
};

struct Attribute {
    Id id;
    std::string name;
    bool builtin = false;
};

struct RangeSpec {
    enum class Kind { Builtin, DataTypeId, ObjectTypeId, ModelTypeId,
                      EndpointSource, EndpointTarget };
    Kind kind = Kind::Builtin;
    DataKind builtin = DataKind::Text; // Kind::Builtin only
    Id ref;                            // id-valued kinds only
};

struct Cardinality {
    std::uint32_t min = 0;
    std::optional<std::uint32_t> max; // absent = unbounded
};

struct ModelType {
    Id id;
    std::vector<ObjectType> object_types;
    std::vector<DataType> data_types;
    std::vector<Attribute> attributes;
};

struct Metamodel {
    Id id;
    std::vector<ModelType> model_types;
    // (a, b) means a is a subtype of b
    std::vector<std::pair<Id, Id>> inheritance;
    std::map<Id, std::set<Id>> domain_map;
    std::map<Id, RangeSpec> range_map;
    std::map<Id, Cardinality> card_map;

    const ObjectType* find_object_type(const Id& id) const;
    const ModelType* find_model_type(const Id& id) const;
    const DataType* find_data_type(const Id& id) const;
    const Attribute* find_attribute(const Id& id) const;
};

// Reserved ids of the auto-attached attribute sets.
namespace builtin {
inline constexpr const char* kUuid = "uuid";
inline constexpr const char* kCoordPosition = "coord.position";
inline constexpr const char* kTransformRotation = "transform.rotation";
inline constexpr const char* kTransformScale = "transform.scale";
inline constexpr const char* kVizrepAsset = "vizrep.asset";
inline constexpr const char* kVizrepExtent = "vizrep.extent";
inline constexpr const char* kVizrepLod = "vizrep.lod";
inline constexpr const char* kFieldSpec = "field.spec";
inline constexpr const char* kEventStart = "event.start";
inline constexpr const char* kEventDuration = "event.duration";
inline constexpr const char* kRelSource = "rel.source";
inline constexpr const char* kRelTarget = "rel.target";
inline constexpr const char* kAnchorCondition = "anchor.condition";
inline constexpr const char* kTemporalRelation = "temporal.relation";
inline constexpr const char* kParticipationRole = "part.role";

// Reserved anchor source token for whole-model anchoring.
inline constexpr const char* kModelToken = "MODEL";
} // namespace builtin

struct BuiltinAttributeSets {
    Id uuid;
    std::vector<Id> coord;
    std::vector<Id> transform;
    std::vector<Id> vizrep;
    std::vector<Id> field_attrs;
    std::vector<Id> event_attrs;

    static const BuiltinAttributeSets& instance();
    // uuid + coord + transform + vizrep, attached to every object type
    std::vector<Id> universal() const;
};

// Attach the builtin attribute sets (uuid, coord, transform, vizrep plus the
// kind-specific sets) to every model type. Idempotent.
void attach_builtins(Metamodel& mm);

struct Violation {
    std::string code;
    std::string location;
    std::string message;
};

using ValidationReport = std::vector<Violation>;
using ConformanceReport = std::vector<Violation>;

ValidationReport validate_metamodel(const Metamodel& mm);

// Throws UNKNOWN_TYPE.
bool subtype_of(const Metamodel& mm, const Id& a, const Id& b);

// Declared + inherited + builtin attributes of t, sorted by attribute id.
// Throws UNKNOWN_TYPE.
std::set<Id> effective_attributes(const Metamodel& mm, const Id& t);

struct ObjectInstance {
    std::string uuid;
    Id object_type;
    std::map<Id, std::vector<Value>> values;
};

struct ModelInstance {
    Id id;
    Id model_type;
    // insertion order; deque keeps references from create_object stable.
    // uuid uniqueness is a conformance check, not a structural guarantee
    std::deque<ObjectInstance> objects;
    // model ids object attributes may reference (always includes this model)
    std::set<Id> known_models;

    ObjectInstance* find_object(const std::string& uuid);
    const ObjectInstance* find_object(const std::string& uuid) const;
};

// Adds an object of non-relational type t with a fresh v4 uuid.
// Throws UNKNOWN_TYPE, KIND_MISMATCH.
ObjectInstance& create_object(ModelInstance& model, const Metamodel& mm,
                              const Id& t);

// Relational variant: source/target endpoint values are required.
ObjectInstance& create_object(ModelInstance& model, const Metamodel& mm,
                              const Id& t, const Value& source,
                              const Value& target);

// Replaces the attribute's values. Card bounds are deferred to
// validate_model; value/range type mismatch fails immediately.
// Throws UNKNOWN_OBJECT, UNKNOWN_ATTRIBUTE, RANGE_TYPE_MISMATCH.
void set_value(ModelInstance& model, const Metamodel& mm,
               const std::string& uuid, const Id& attr,
               std::vector<Value> values);

// Throws UNKNOWN_OBJECT. Never cascades; dangling references surface on the
// next validate_model.
void delete_object(ModelInstance& model, const std::string& uuid);

// Objects sorted by uuid; optional type filter. Throws UNKNOWN_TYPE.
std::vector<const ObjectInstance*>
iterate_objects(const ModelInstance& model, const Metamodel& mm,
                const std::optional<Id>& filter = std::nullopt,
                bool include_subtypes = false);

// Throws Error(INVALID_METAMODEL) if mm itself does not validate.
ConformanceReport validate_model(const ModelInstance& model,
                                 const Metamodel& mm);

} // namespace scm

#endif
