#ifndef SCM_TEMPORAL_HPP
#define SCM_TEMPORAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "scm/kernel.hpp"

namespace scm {

struct EventInterval {
    std::string uuid;
    std::optional<std::int64_t> start;    // UTC seconds
    std::optional<std::int64_t> duration; // seconds, >= 0
};

// The 13 Allen interval relations.
enum class AllenRelation {
    Before,
    After,
    Meets,
    MetBy,
    Overlaps,
    OverlappedBy,
    During,
    Contains,
    Starts,
    StartedBy,
    Finishes,
    FinishedBy,
    Equals,
};

const char* allen_name(AllenRelation r);
std::optional<AllenRelation> allen_from_name(const std::string& name);
AllenRelation allen_converse(AllenRelation r);

// Throws NO_TIMESTAMP when start is absent.
std::int64_t when(const EventInterval& e);

// The unique Allen relation between two fully-timestamped intervals
// (duration 0 point events allowed). Throws NO_TIMESTAMP.
AllenRelation infer_relation(const EventInterval& a, const EventInterval& b);

// Extracts event-kind objects from a model as intervals.
EventInterval event_from_object(const ObjectInstance& obj);

// Cycle detection over strict-precedence assertions plus direct contradiction
// of asserted relations against timestamped intervals.
ConformanceReport check_temporal_consistency(const ModelInstance& model,
                                             const Metamodel& mm);

} // namespace scm

#endif
