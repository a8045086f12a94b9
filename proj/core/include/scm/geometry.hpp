#ifndef SCM_GEOMETRY_HPP
#define SCM_GEOMETRY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

namespace scm {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double norm() const;
};

// Unit quaternion, scalar-first. Canonical form keeps w >= 0.
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static Quaternion identity() { return {1, 0, 0, 0}; }
    Quaternion operator*(const Quaternion& o) const;
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Vec3 rotate(const Vec3& v) const;
    double norm() const;
    Quaternion normalized() const;
    // Sign-canonical: w >= 0 (negate all components if needed).
    Quaternion canonical() const;
    std::array<std::array<double, 3>, 3> to_matrix() const;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Rotation + translation + uniform positive scale.
struct Pose {
    Quaternion rotation;
    Vec3 translation;
    double scale = 1.0;

    static Pose identity() { return {}; }
    Vec3 apply(const Vec3& p) const;
};

Quaternion quat_from_euler_xyz(double rx, double ry, double rz);
// Throws NOT_A_ROTATION if m is not orthonormal within 1e-6.
Quaternion quat_from_matrix(const Mat3& m);
Quaternion normalize_rotation(const Quaternion& q);

// a then-applied-after b: result(p) = a(b(p)).
Pose compose(const Pose& a, const Pose& b);
Pose invert(const Pose& p);

// Rooted hierarchy of coordinate frames. Immutable in use: register_frame
// returns an extended copy.
class FrameTree {
public:
    static constexpr const char* kWorld = "world";

    FrameTree();

    // Throws DUPLICATE_FRAME or UNKNOWN_PARENT.
    FrameTree with_frame(const std::string& id, const std::string& parent,
                         const Pose& pose) const;

    bool has_frame(const std::string& id) const;

    // Pose mapping frame-local points into world coordinates.
    Pose world_pose(const std::string& frame) const;

    // Map a point given in `from` coordinates into `to` coordinates.
    Vec3 resolve(const Vec3& position, const std::string& from,
                 const std::string& to) const;

    const std::map<std::string, std::pair<std::optional<std::string>, Pose>>&
    frames() const {
        return frames_;
    }

private:
    // frame id -> (parent, pose of frame relative to parent); world has no parent
    std::map<std::string, std::pair<std::optional<std::string>, Pose>> frames_;
};

// Position tagged with the frame it is expressed in.
struct CoordinateValue {
    std::string frame = FrameTree::kWorld;
    Vec3 position;
};

// Euclidean world-frame distance between two tagged positions.
double distance(const FrameTree& tree, const CoordinateValue& a,
                const CoordinateValue& b);

} // namespace scm

#endif
