#ifndef SCM_VALUES_HPP
#define SCM_VALUES_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "scm/geometry.hpp"

namespace scm {

// Axis-aligned extent in the object's local frame.
struct ExtentBox {
    Vec3 center;
    Vec3 half_sizes; // strictly positive
};

// A full pose tagged with the frame it is expressed in (point-of-interest
// anchor targets).
struct PoseValue {
    std::string frame = FrameTree::kWorld;
    Pose pose;
};

// Field definition: either a closed-form expression over x,y,z or a
// trilinearly interpolated sample grid. Positions are interpreted in `frame`.
struct FieldSpec {
    enum class Kind { Analytic, Grid };
    Kind kind = Kind::Analytic;
    std::string expression; // analytic only
    // grid only; samples in x-fastest order
    Vec3 bounds_min, bounds_max;
    std::array<std::size_t, 3> counts{0, 0, 0};
    std::vector<double> samples;
    std::string frame = FrameTree::kWorld;
    std::string value_unit;
};

struct ObjectRef {
    std::string uuid;
};
struct ModelRef {
    std::string model_id;
};
struct Timestamp {
    std::int64_t seconds = 0; // UTC
};
struct Duration {
    std::int64_t seconds = 0; // >= 0
};

using Value = std::variant<std::string, std::int64_t, double, bool, Timestamp,
                           Duration, CoordinateValue, Quaternion, ExtentBox,
                           FieldSpec, ObjectRef, ModelRef, PoseValue>;

// Fresh RFC 4122 version-4 UUID in lowercase 8-4-4-4-12 form.
std::string generate_uuid();

} // namespace scm

#endif
