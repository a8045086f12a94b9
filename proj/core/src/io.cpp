#include "scm/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "scm/error.hpp"

namespace scm::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
    // structural errors after JSON parsing carry no useful position
    throw ParseError(1, 1, msg);
}

// ---- canonical text emission ----

void emit_number(double v, std::string& out) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        out += buf;
        out += ".0";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out += buf;
}

void emit(const json& j, std::string& out, int depth) {
    std::string pad(2 * (depth + 1), ' ');
    std::string closepad(2 * depth, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) { out += "{}"; return; }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) { // keys already sorted
            if (!first) out += ",\n";
            first = false;
            out += pad;
            out += json(it.key()).dump();
            out += ": ";
            emit(it.value(), out, depth + 1);
        }
        out += "\n" + closepad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) { out += "[]"; return; }
        out += "[\n";
        bool first = true;
        for (const auto& el : j) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            emit(el, out, depth + 1);
        }
        out += "\n" + closepad + "]";
        return;
    }
    case json::value_t::number_float:
        emit_number(j.get<double>(), out);
        return;
    default:
        out += j.dump();
        return;
    }
}

std::string canonical(const json& j) {
    std::string out;
    emit(j, out, 0);
    out += "\n";
    return out;
}

// ---- enum names ----

const std::pair<ObjectKind, const char*> kObjectKinds[] = {
    {ObjectKind::Virtual, "virtual"},
    {ObjectKind::Real, "real"},
    {ObjectKind::Anchor, "anchor"},
    {ObjectKind::Field, "field"},
    {ObjectKind::Event, "event"},
    {ObjectKind::TemporalRelation, "temporal-relation"},
    {ObjectKind::Participation, "participation"},
    {ObjectKind::Node, "node"},
    {ObjectKind::Edge, "edge"},
};

const std::pair<DataKind, const char*> kDataKinds[] = {
    {DataKind::Text, "text"},
    {DataKind::Integer, "integer"},
    {DataKind::Real, "real"},
    {DataKind::Boolean, "boolean"},
    {DataKind::Enumeration, "enumeration"},
    {DataKind::Timestamp, "timestamp"},
    {DataKind::Duration, "duration"},
    {DataKind::CoordinateTriple, "coordinate-triple"},
    {DataKind::Rotation, "rotation"},
    {DataKind::ExtentBox, "extent-box"},
    {DataKind::FieldSpecKind, "field-spec"},
};

std::string kind_name(ObjectKind k) {
    for (const auto& [kk, n] : kObjectKinds)
        if (kk == k) return n;
    return "virtual";
}

ObjectKind kind_from(const std::string& s) {
    for (const auto& [k, n] : kObjectKinds)
        if (s == n) return k;
    fail("unknown object kind '" + s + "'");
}

std::string data_kind_name(DataKind k) {
    for (const auto& [kk, n] : kDataKinds)
        if (kk == k) return n;
    return "text";
}

DataKind data_kind_from(const std::string& s) {
    for (const auto& [k, n] : kDataKinds)
        if (s == n) return k;
    fail("unknown data kind '" + s + "'");
}

// ---- geometry ----

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json pose_to_json(const Pose& p) {
    return {{"rot", {p.rotation.w, p.rotation.x, p.rotation.y, p.rotation.z}},
            {"pos", vec_to_json(p.translation)},
            {"scale", p.scale}};
}

Pose pose_from_json(const json& j) {
    Pose p;
    if (j.contains("rot")) {
        const json& q = j["rot"];
        if (!q.is_array() || q.size() != 4) fail("rot must have 4 components");
        p.rotation = Quaternion{q[0].get<double>(), q[1].get<double>(),
                                q[2].get<double>(), q[3].get<double>()};
    }
    if (j.contains("pos")) p.translation = vec_from_json(j["pos"]);
    if (j.contains("scale")) p.scale = j["scale"].get<double>();
    return p;
}

// ---- values ----

json value_to_json(const Value& v);

json field_to_json(const FieldSpec& f) {
    json j;
    j["frame"] = f.frame;
    j["unit"] = f.value_unit;
    if (f.kind == FieldSpec::Kind::Analytic) {
        j["kind"] = "analytic";
        j["expr"] = f.expression;
    } else {
        j["kind"] = "grid";
        j["min"] = vec_to_json(f.bounds_min);
        j["max"] = vec_to_json(f.bounds_max);
        j["counts"] = {f.counts[0], f.counts[1], f.counts[2]};
        j["samples"] = f.samples; // x-fastest order
    }
    return j;
}

FieldSpec field_from_json(const json& j) {
    FieldSpec f;
    f.frame = j.value("frame", std::string(FrameTree::kWorld));
    f.value_unit = j.value("unit", std::string());
    std::string kind = j.value("kind", std::string("analytic"));
    if (kind == "analytic") {
        f.kind = FieldSpec::Kind::Analytic;
        f.expression = j.value("expr", std::string());
    } else if (kind == "grid") {
        f.kind = FieldSpec::Kind::Grid;
        f.bounds_min = vec_from_json(j.at("min"));
        f.bounds_max = vec_from_json(j.at("max"));
        const json& c = j.at("counts");
        if (!c.is_array() || c.size() != 3) fail("counts must have 3 entries");
        f.counts = {c[0].get<std::size_t>(), c[1].get<std::size_t>(),
                    c[2].get<std::size_t>()};
        f.samples = j.at("samples").get<std::vector<double>>();
    } else {
        fail("unknown field kind '" + kind + "'");
    }
    return f;
}

json value_to_json(const Value& v) {
    struct Visitor {
        json operator()(const std::string& s) const { return s; }
        json operator()(std::int64_t i) const { return i; }
        json operator()(double d) const { return json{{"real", d}}; }
        json operator()(bool b) const { return b; }
        json operator()(const Timestamp& t) const { return json{{"t", t.seconds}}; }
        json operator()(const Duration& d) const { return json{{"dur", d.seconds}}; }
        json operator()(const CoordinateValue& c) const {
            return json{{"frame", c.frame}, {"pos", vec_to_json(c.position)}};
        }
        json operator()(const Quaternion& q) const {
            return json{{"rot", {q.w, q.x, q.y, q.z}}};
        }
        json operator()(const ExtentBox& e) const {
            return json{{"center", vec_to_json(e.center)},
                        {"half", vec_to_json(e.half_sizes)}};
        }
        json operator()(const FieldSpec& f) const {
            return json{{"field", field_to_json(f)}};
        }
        json operator()(const ObjectRef& r) const { return json{{"ref", r.uuid}}; }
        json operator()(const ModelRef& r) const {
            return json{{"model_ref", r.model_id}};
        }
        json operator()(const PoseValue& p) const {
            json j = pose_to_json(p.pose);
            j["frame"] = p.frame;
            return j;
        }
    };
    return std::visit(Visitor{}, v);
}

Value value_from_json(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    if (!j.is_object()) fail("unsupported value encoding");
    if (j.contains("real")) return j["real"].get<double>();
    if (j.contains("t")) return Timestamp{j["t"].get<std::int64_t>()};
    if (j.contains("dur")) return Duration{j["dur"].get<std::int64_t>()};
    if (j.contains("field")) return field_from_json(j["field"]);
    if (j.contains("ref")) return ObjectRef{j["ref"].get<std::string>()};
    if (j.contains("model_ref"))
        return ModelRef{j["model_ref"].get<std::string>()};
    if (j.contains("center"))
        return ExtentBox{vec_from_json(j.at("center")), vec_from_json(j.at("half"))};
    if (j.contains("rot") && (j.contains("scale") || j.contains("pos"))) {
        PoseValue p;
        p.frame = j.value("frame", std::string(FrameTree::kWorld));
        p.pose = pose_from_json(j);
        return p;
    }
    if (j.contains("rot")) {
        const json& q = j["rot"];
        if (!q.is_array() || q.size() != 4) fail("rot must have 4 components");
        return Quaternion{q[0].get<double>(), q[1].get<double>(),
                          q[2].get<double>(), q[3].get<double>()};
    }
    if (j.contains("pos")) {
        CoordinateValue c;
        c.frame = j.value("frame", std::string(FrameTree::kWorld));
        c.position = vec_from_json(j.at("pos"));
        return c;
    }
    fail("unsupported value encoding");
}

// ---- metamodel ----

json metamodel_to_json(const Metamodel& mm) {
    json j;
    j["id"] = mm.id;

    std::vector<std::pair<Id, Id>> inh = mm.inheritance;
    std::sort(inh.begin(), inh.end());
    json jinh = json::array();
    for (const auto& [a, b] : inh) jinh.push_back(json::array({a, b}));
    j["inheritance"] = jinh;

    std::set<Id> builtin_ids;
    json jmts = json::array();
    std::vector<const ModelType*> mts;
    for (const auto& mt : mm.model_types) mts.push_back(&mt);
    std::sort(mts.begin(), mts.end(),
              [](const ModelType* a, const ModelType* b) { return a->id < b->id; });
    for (const ModelType* mt : mts) {
        json jmt;
        jmt["id"] = mt->id;
        json jots = json::array();
        std::vector<const ObjectType*> ots;
        for (const auto& ot : mt->object_types) ots.push_back(&ot);
        std::sort(ots.begin(), ots.end(), [](const ObjectType* a, const ObjectType* b) {
            return a->id < b->id;
        });
        for (const ObjectType* ot : ots) {
            json jot{{"id", ot->id}, {"name", ot->name}, {"kind", kind_name(ot->kind)}};
            if (ot->endpoints) {
                json je;
                json src = json::array(), dst = json::array();
                for (ObjectKind k : ot->endpoints->source_kinds)
                    src.push_back(kind_name(k));
                for (ObjectKind k : ot->endpoints->target_kinds)
                    dst.push_back(kind_name(k));
                je["source_kinds"] = src;
                je["target_kinds"] = dst;
                je["model_source"] = ot->endpoints->model_source;
                je["poi_target"] = ot->endpoints->poi_target;
                jot["endpoints"] = je;
            }
            jots.push_back(jot);
        }
        jmt["object_types"] = jots;

        json jdts = json::array();
        std::vector<const DataType*> dts;
        for (const auto& dt : mt->data_types) dts.push_back(&dt);
        std::sort(dts.begin(), dts.end(), [](const DataType* a, const DataType* b) {
            return a->id < b->id;
        });
        for (const DataType* dt : dts) {
            json jdt{{"id", dt->id}, {"kind", data_kind_name(dt->kind)}};
            if (dt->kind == DataKind::Enumeration) jdt["values"] = dt->enum_values;
            jdts.push_back(jdt);
        }
        jmt["data_types"] = jdts;

        json jattrs = json::array();
        std::vector<const Attribute*> attrs;
        for (const auto& a : mt->attributes) {
            if (a.builtin) {
                builtin_ids.insert(a.id);
                continue;
            }
            attrs.push_back(&a);
        }
        std::sort(attrs.begin(), attrs.end(),
                  [](const Attribute* a, const Attribute* b) { return a->id < b->id; });
        for (const Attribute* a : attrs)
            jattrs.push_back(json{{"id", a->id}, {"name", a->name}});
        jmt["attributes"] = jattrs;
        jmts.push_back(jmt);
    }
    j["model_types"] = jmts;

    json jspec = json::object();
    for (const auto& [attr, domain] : mm.domain_map) {
        if (builtin_ids.count(attr)) continue;
        json entry;
        entry["domain"] = std::vector<Id>(domain.begin(), domain.end());
        auto rit = mm.range_map.find(attr);
        if (rit != mm.range_map.end()) {
            const RangeSpec& r = rit->second;
            json jr;
            switch (r.kind) {
            case RangeSpec::Kind::DataTypeId: jr = {{"data", r.ref}}; break;
            case RangeSpec::Kind::ObjectTypeId: jr = {{"object", r.ref}}; break;
            case RangeSpec::Kind::ModelTypeId: jr = {{"model", r.ref}}; break;
            default: jr = {{"builtin", data_kind_name(r.builtin)}}; break;
            }
            entry["range"] = jr;
        }
        auto cit = mm.card_map.find(attr);
        if (cit != mm.card_map.end()) {
            json jc{{"min", cit->second.min}};
            if (cit->second.max) jc["max"] = *cit->second.max;
            else jc["max"] = nullptr;
            entry["card"] = jc;
        }
        jspec[attr] = entry;
    }
    j["attributes"] = jspec;
    return j;
}

Metamodel metamodel_from_json(const json& j) {
    Metamodel mm;
    mm.id = j.value("id", std::string());
    for (const auto& pair : j.value("inheritance", json::array())) {
        if (!pair.is_array() || pair.size() != 2)
            fail("inheritance entries must be [sub, super] pairs");
        mm.inheritance.push_back({pair[0].get<Id>(), pair[1].get<Id>()});
    }
    for (const auto& jmt : j.value("model_types", json::array())) {
        ModelType mt;
        mt.id = jmt.value("id", std::string());
        for (const auto& jot : jmt.value("object_types", json::array())) {
            ObjectType ot;
            ot.id = jot.value("id", std::string());
            ot.name = jot.value("name", std::string());
            ot.kind = kind_from(jot.value("kind", std::string("virtual")));
            if (jot.contains("endpoints")) {
                EndpointSpec es;
                for (const auto& k : jot["endpoints"].value("source_kinds", json::array()))
                    es.source_kinds.insert(kind_from(k.get<std::string>()));
                for (const auto& k : jot["endpoints"].value("target_kinds", json::array()))
                    es.target_kinds.insert(kind_from(k.get<std::string>()));
                es.model_source = jot["endpoints"].value("model_source", false);
                es.poi_target = jot["endpoints"].value("poi_target", false);
                ot.endpoints = es;
            } else if (is_relational(ot.kind)) {
                // default endpoint spec per relational kind
                EndpointSpec es;
                switch (ot.kind) {
                case ObjectKind::Anchor:
                    es.source_kinds = {ObjectKind::Virtual};
                    es.target_kinds = {ObjectKind::Real};
                    es.model_source = true;
                    es.poi_target = true;
                    break;
                case ObjectKind::Edge:
                    es.source_kinds = es.target_kinds = {ObjectKind::Node};
                    break;
                case ObjectKind::TemporalRelation:
                    es.source_kinds = es.target_kinds = {ObjectKind::Event};
                    break;
                default:
                    es.source_kinds = {ObjectKind::Event};
                    break;
                }
                ot.endpoints = es;
            }
            mt.object_types.push_back(std::move(ot));
        }
        for (const auto& jdt : jmt.value("data_types", json::array())) {
            DataType dt;
            dt.id = jdt.value("id", std::string());
            dt.kind = data_kind_from(jdt.value("kind", std::string("text")));
            if (jdt.contains("values"))
                dt.enum_values = jdt["values"].get<std::vector<std::string>>();
            mt.data_types.push_back(std::move(dt));
        }
        for (const auto& ja : jmt.value("attributes", json::array()))
            mt.attributes.push_back(
                {ja.value("id", std::string()), ja.value("name", std::string()), false});
        mm.model_types.push_back(std::move(mt));
    }
    const json jattrs = j.value("attributes", json::object());
    for (const auto& [attr, entry] : jattrs.items()) {
        for (const auto& d : entry.value("domain", json::array()))
            mm.domain_map[attr].insert(d.get<Id>());
        if (entry.contains("range")) {
            const json& jr = entry["range"];
            RangeSpec r;
            if (jr.contains("data")) {
                r.kind = RangeSpec::Kind::DataTypeId;
                r.ref = jr["data"].get<Id>();
            } else if (jr.contains("object")) {
                r.kind = RangeSpec::Kind::ObjectTypeId;
                r.ref = jr["object"].get<Id>();
            } else if (jr.contains("model")) {
                r.kind = RangeSpec::Kind::ModelTypeId;
                r.ref = jr["model"].get<Id>();
            } else if (jr.contains("builtin")) {
                r.kind = RangeSpec::Kind::Builtin;
                r.builtin = data_kind_from(jr["builtin"].get<std::string>());
            } else {
                fail("attribute '" + attr + "' has an unrecognized range");
            }
            mm.range_map[attr] = r;
        }
        if (entry.contains("card")) {
            Cardinality c;
            c.min = entry["card"].value("min", 0u);
            if (entry["card"].contains("max") && !entry["card"]["max"].is_null())
                c.max = entry["card"]["max"].get<std::uint32_t>();
            mm.card_map[attr] = c;
        }
    }
    attach_builtins(mm);
    return mm;
}

// ---- model ----

json model_to_json(const ModelInstance& m) {
    json j;
    j["id"] = m.id;
    j["model_type"] = m.model_type;
    std::set<Id> known = m.known_models;
    known.erase(m.id);
    j["known_models"] = std::vector<Id>(known.begin(), known.end());
    std::vector<const ObjectInstance*> objs;
    for (const auto& o : m.objects) objs.push_back(&o);
    std::sort(objs.begin(), objs.end(),
              [](const ObjectInstance* a, const ObjectInstance* b) {
                  return a->uuid < b->uuid;
              });
    json jobjs = json::array();
    for (const ObjectInstance* o : objs) {
        json jo{{"uuid", o->uuid}, {"type", o->object_type}};
        json jv = json::object();
        for (const auto& [attr, values] : o->values) {
            json arr = json::array();
            for (const Value& v : values) arr.push_back(value_to_json(v));
            jv[attr] = arr;
        }
        jo["values"] = jv;
        jobjs.push_back(jo);
    }
    j["objects"] = jobjs;
    return j;
}

ModelInstance model_from_json(const json& j) {
    ModelInstance m;
    m.id = j.value("id", std::string());
    m.model_type = j.value("model_type", std::string());
    m.known_models.insert(m.id);
    for (const auto& k : j.value("known_models", json::array()))
        m.known_models.insert(k.get<Id>());
    for (const auto& jo : j.value("objects", json::array())) {
        ObjectInstance o;
        o.uuid = jo.value("uuid", std::string());
        o.object_type = jo.value("type", std::string());
        const json jvalues = jo.value("values", json::object());
        for (const auto& [attr, arr] : jvalues.items()) {
            std::vector<Value> values;
            if (!arr.is_array()) fail("attribute values must be arrays");
            for (const auto& jv : arr) values.push_back(value_from_json(jv));
            o.values[attr] = std::move(values);
        }
        m.objects.push_back(std::move(o));
    }
    return m;
}

// ---- scene ----

json scene_to_json(const std::vector<Placement>& placements) {
    std::vector<const Placement*> ps;
    for (const auto& p : placements) ps.push_back(&p);
    std::stable_sort(ps.begin(), ps.end(), [](const Placement* a, const Placement* b) {
        return a->source < b->source;
    });
    json arr = json::array();
    for (const Placement* p : ps) {
        json jp{{"source", p->source}, {"pose", pose_to_json(p->pose)}};
        json viz = json::object();
        for (const auto& [attr, values] : p->vizrep) {
            json a = json::array();
            for (const Value& v : values) a.push_back(value_to_json(v));
            viz[attr] = a;
        }
        jp["vizrep"] = viz;
        arr.push_back(jp);
    }
    return json{{"placements", arr}};
}

std::vector<Placement> scene_from_json(const json& j) {
    std::vector<Placement> out;
    for (const auto& jp : j.value("placements", json::array())) {
        Placement p;
        p.source = jp.value("source", std::string());
        if (jp.contains("pose")) p.pose = pose_from_json(jp["pose"]);
        const json jviz = jp.value("vizrep", json::object());
        for (const auto& [attr, arr] : jviz.items()) {
            std::vector<Value> values;
            for (const auto& jv : arr) values.push_back(value_from_json(jv));
            p.vizrep[attr] = std::move(values);
        }
        out.push_back(std::move(p));
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // translate byte offset into 1-based line/column
        std::size_t line = 1, col = 1;
        std::size_t limit = e.byte > 0 ? e.byte - 1 : 0;
        for (std::size_t i = 0; i < limit && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        throw ParseError(line, col, e.what());
    }
}

json wrap(const char* key, json payload) {
    return json{{"format_version", kFormatVersion}, {key, std::move(payload)}};
}

} // namespace

Document parse_document(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) fail("document root must be an object");
    std::string version = j.value("format_version", std::string());
    if (version != kFormatVersion)
        throw Error("UNSUPPORTED_VERSION",
                    "unsupported format_version '" + version + "'");
    Document doc;
    if (j.contains("metamodel")) doc.metamodel = metamodel_from_json(j["metamodel"]);
    else if (j.contains("model")) doc.model = model_from_json(j["model"]);
    else if (j.contains("scene")) doc.scene = scene_from_json(j["scene"]);
    else fail("document must contain metamodel, model, or scene");
    return doc;
}

std::string serialize_document(const Metamodel& mm) {
    return canonical(wrap("metamodel", metamodel_to_json(mm)));
}

std::string serialize_document(const ModelInstance& model) {
    return canonical(wrap("model", model_to_json(model)));
}

std::string serialize_document(const std::vector<Placement>& scene) {
    return canonical(wrap("scene", scene_to_json(scene)));
}

std::string serialize_report(const std::vector<Violation>& report) {
    json arr = json::array();
    for (const auto& v : report)
        arr.push_back(json{{"code", v.code}, {"location", v.location},
                           {"message", v.message}});
    return canonical(json{{"violations", arr}});
}

FrameTree parse_frames(const std::string& text) {
    json j = parse_json(text);
    FrameTree tree;
    if (!j.is_object() || !j.contains("frames"))
        fail("frames file must contain a 'frames' array");
    // parents may be declared after children; insert until fixpoint
    std::vector<json> pending(j["frames"].begin(), j["frames"].end());
    while (!pending.empty()) {
        std::vector<json> next;
        bool progress = false;
        for (const auto& jf : pending) {
            std::string id = jf.value("id", std::string());
            std::string parent = jf.value("parent", std::string(FrameTree::kWorld));
            if (!tree.has_frame(parent)) {
                next.push_back(jf);
                continue;
            }
            Pose pose =
                jf.contains("pose") ? pose_from_json(jf["pose"]) : Pose::identity();
            tree = tree.with_frame(id, parent, pose);
            progress = true;
        }
        if (!progress)
            throw Error("UNKNOWN_PARENT", "frames reference a missing parent");
        pending = std::move(next);
    }
    return tree;
}

expr::Context parse_context(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) fail("context file must be a flat object");
    expr::Context ctx;
    for (const auto& [key, value] : j.items()) {
        if (value.is_boolean()) ctx[key] = value.get<bool>();
        else if (value.is_number()) ctx[key] = value.get<double>();
        else if (value.is_string()) ctx[key] = value.get<std::string>();
        else fail("context values must be number, text, or boolean");
    }
    return ctx;
}

} // namespace scm::io
