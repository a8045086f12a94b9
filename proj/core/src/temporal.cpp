#include "scm/temporal.hpp"

#include <functional>
#include <map>
#include <vector>

#include "scm/error.hpp"

namespace scm {

namespace {

const std::pair<AllenRelation, const char*> kNames[] = {
    {AllenRelation::Before, "before"},
    {AllenRelation::After, "after"},
    {AllenRelation::Meets, "meets"},
    {AllenRelation::MetBy, "met-by"},
    {AllenRelation::Overlaps, "overlaps"},
    {AllenRelation::OverlappedBy, "overlapped-by"},
    {AllenRelation::During, "during"},
    {AllenRelation::Contains, "contains"},
    {AllenRelation::Starts, "starts"},
    {AllenRelation::StartedBy, "started-by"},
    {AllenRelation::Finishes, "finishes"},
    {AllenRelation::FinishedBy, "finished-by"},
    {AllenRelation::Equals, "equals"},
};

} // namespace

const char* allen_name(AllenRelation r) {
    for (const auto& [rel, name] : kNames)
        if (rel == r) return name;
    return "?";
}

std::optional<AllenRelation> allen_from_name(const std::string& name) {
    for (const auto& [rel, n] : kNames)
        if (name == n) return rel;
    return std::nullopt;
}

AllenRelation allen_converse(AllenRelation r) {
    switch (r) {
    case AllenRelation::Before: return AllenRelation::After;
    case AllenRelation::After: return AllenRelation::Before;
    case AllenRelation::Meets: return AllenRelation::MetBy;
    case AllenRelation::MetBy: return AllenRelation::Meets;
    case AllenRelation::Overlaps: return AllenRelation::OverlappedBy;
    case AllenRelation::OverlappedBy: return AllenRelation::Overlaps;
    case AllenRelation::During: return AllenRelation::Contains;
    case AllenRelation::Contains: return AllenRelation::During;
    case AllenRelation::Starts: return AllenRelation::StartedBy;
    case AllenRelation::StartedBy: return AllenRelation::Starts;
    case AllenRelation::Finishes: return AllenRelation::FinishedBy;
    case AllenRelation::FinishedBy: return AllenRelation::Finishes;
    case AllenRelation::Equals: return AllenRelation::Equals;
    }
    return AllenRelation::Equals;
}

std::int64_t when(const EventInterval& e) {
    if (!e.start) throw Error("NO_TIMESTAMP", "event has no start: " + e.uuid);
    return *e.start;
}

AllenRelation infer_relation(const EventInterval& a, const EventInterval& b) {
    if (!a.start || !a.duration || !b.start || !b.duration)
        throw Error("NO_TIMESTAMP", "both events need start and duration");
    std::int64_t as = *a.start, ae = as + *a.duration;
    std::int64_t bs = *b.start, be = bs + *b.duration;
    if (as == bs && ae == be) return AllenRelation::Equals;
    if (as == bs) return ae < be ? AllenRelation::Starts : AllenRelation::StartedBy;
    if (ae == be) return as > bs ? AllenRelation::Finishes : AllenRelation::FinishedBy;
    if (as > bs && ae < be) return AllenRelation::During;
    if (as < bs && ae > be) return AllenRelation::Contains;
    if (as < bs) {
        if (ae < bs) return AllenRelation::Before;
        if (ae == bs) return AllenRelation::Meets;
        return AllenRelation::Overlaps;
    }
    if (as > be) return AllenRelation::After;
    if (as == be) return AllenRelation::MetBy;
    return AllenRelation::OverlappedBy;
}

EventInterval event_from_object(const ObjectInstance& obj) {
    EventInterval e;
    e.uuid = obj.uuid;
    if (auto it = obj.values.find(builtin::kEventStart);
        it != obj.values.end() && !it->second.empty())
        if (auto* ts = std::get_if<Timestamp>(&it->second.front()))
            e.start = ts->seconds;
    if (auto it = obj.values.find(builtin::kEventDuration);
        it != obj.values.end() && !it->second.empty())
        if (auto* d = std::get_if<Duration>(&it->second.front()))
            e.duration = d->seconds;
    return e;
}

ConformanceReport check_temporal_consistency(const ModelInstance& model,
                                             const Metamodel& mm) {
    ConformanceReport report;
    std::map<std::string, EventInterval> events;
    for (const auto& obj : model.objects) {
        const ObjectType* ot = mm.find_object_type(obj.object_type);
        if (ot && ot->kind == ObjectKind::Event)
            events[obj.uuid] = event_from_object(obj);
    }

    std::map<std::string, std::vector<std::string>> precedes;
    for (const auto& obj : model.objects) {
        const ObjectType* ot = mm.find_object_type(obj.object_type);
        if (!ot || ot->kind != ObjectKind::TemporalRelation) continue;
        auto ref = [&](const char* attr) -> std::string {
            auto it = obj.values.find(attr);
            if (it == obj.values.end() || it->second.empty()) return {};
            auto* r = std::get_if<ObjectRef>(&it->second.front());
            return r ? r->uuid : std::string{};
        };
        std::string src = ref(builtin::kRelSource);
        std::string dst = ref(builtin::kRelTarget);
        if (src.empty() || dst.empty()) continue;
        std::string name;
        if (auto it = obj.values.find(builtin::kTemporalRelation);
            it != obj.values.end() && !it->second.empty())
            if (auto* s = std::get_if<std::string>(&it->second.front()))
                name = *s;
        auto rel = allen_from_name(name);
        if (!rel) {
            report.push_back({"UNKNOWN_RELATION", obj.uuid,
                              "unknown temporal relation '" + name + "'"});
            continue;
        }
        switch (*rel) {
        case AllenRelation::Before:
        case AllenRelation::Meets:
            precedes[src].push_back(dst);
            break;
        case AllenRelation::After:
        case AllenRelation::MetBy:
            precedes[dst].push_back(src);
            break;
        default:
            break;
        }
        auto sit = events.find(src);
        auto tit = events.find(dst);
        if (sit != events.end() && tit != events.end() &&
            sit->second.start && sit->second.duration && tit->second.start &&
            tit->second.duration) {
            AllenRelation actual = infer_relation(sit->second, tit->second);
            if (actual != *rel)
                report.push_back(
                    {"CONTRADICTION", obj.uuid,
                     std::string("asserted ") + allen_name(*rel) +
                         " but timestamps imply " + allen_name(actual)});
        }
    }

    std::map<std::string, int> state;
    bool cycle = false;
    std::function<void(const std::string&)> dfs = [&](const std::string& n) {
        state[n] = 1;
        if (auto it = precedes.find(n); it != precedes.end()) {
            for (const auto& m : it->second) {
                if (state[m] == 1) cycle = true;
                else if (state[m] == 0) dfs(m);
            }
        }
        state[n] = 2;
    };
    std::vector<std::string> roots;
    for (const auto& [n, _] : precedes) roots.push_back(n);
    for (const auto& n : roots)
        if (state[n] == 0) dfs(n);
    if (cycle)
        report.push_back({"CYCLE", "temporal",
                          "strict precedence relations form a cycle"});
    return report;
}

} // namespace scm
