#include "scm/geometry.hpp"

#include <cmath>

#include "scm/error.hpp"

namespace scm {

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

Vec3 Quaternion::rotate(const Vec3& v) const {
    Quaternion p{0, v.x, v.y, v.z};
    Quaternion r = *this * p * conjugate();
    return {r.x, r.y, r.z};
}

double Quaternion::norm() const {
    return std::sqrt(w * w + x * x + y * y + z * z);
}

Quaternion Quaternion::normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::canonical() const {
    if (w < 0 || (w == 0 && (x < 0 || (x == 0 && (y < 0 || (y == 0 && z < 0))))))
        return {-w, -x, -y, -z};
    return *this;
}

Mat3 Quaternion::to_matrix() const {
    double ww = w * w, xx = x * x, yy = y * y, zz = z * z;
    return {{{ww + xx - yy - zz, 2 * (x * y - w * z), 2 * (x * z + w * y)},
             {2 * (x * y + w * z), ww - xx + yy - zz, 2 * (y * z - w * x)},
             {2 * (x * z - w * y), 2 * (y * z + w * x), ww - xx - yy + zz}}};
}

Vec3 Pose::apply(const Vec3& p) const {
    return rotation.rotate(p * scale) + translation;
}

Quaternion quat_from_euler_xyz(double rx, double ry, double rz) {
    Quaternion qx{std::cos(rx / 2), std::sin(rx / 2), 0, 0};
    Quaternion qy{std::cos(ry / 2), 0, std::sin(ry / 2), 0};
    Quaternion qz{std::cos(rz / 2), 0, 0, std::sin(rz / 2)};
    // intrinsic XYZ
    return (qx * qy * qz).normalized().canonical();
}

Quaternion quat_from_matrix(const Mat3& m) {
    // orthonormality check: M * M^T == I and det == +1
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dot = 0;
            for (int k = 0; k < 3; ++k) dot += m[i][k] * m[j][k];
            double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-6)
                throw Error("NOT_A_ROTATION", "matrix rows are not orthonormal");
        }
    }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det - 1.0) > 1e-6)
        throw Error("NOT_A_ROTATION", "matrix determinant is not +1");

    // Shepperd's method
    Quaternion q;
    double tr = m[0][0] + m[1][1] + m[2][2];
    if (tr > 0) {
        double s = std::sqrt(tr + 1.0) * 2;
        q = {0.25 * s, (m[2][1] - m[1][2]) / s, (m[0][2] - m[2][0]) / s,
             (m[1][0] - m[0][1]) / s};
    } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
        double s = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]) * 2;
        q = {(m[2][1] - m[1][2]) / s, 0.25 * s, (m[0][1] + m[1][0]) / s,
             (m[0][2] + m[2][0]) / s};
    } else if (m[1][1] > m[2][2]) {
        double s = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]) * 2;
        q = {(m[0][2] - m[2][0]) / s, (m[0][1] + m[1][0]) / s, 0.25 * s,
             (m[1][2] + m[2][1]) / s};
    } else {
        double s = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]) * 2;
        q = {(m[1][0] - m[0][1]) / s, (m[0][2] + m[2][0]) / s,
             (m[1][2] + m[2][1]) / s, 0.25 * s};
    }
    return q.normalized().canonical();
}

Quaternion normalize_rotation(const Quaternion& q) {
    if (q.norm() == 0) throw Error("NOT_A_ROTATION", "zero quaternion");
    return q.normalized().canonical();
}

Pose compose(const Pose& a, const Pose& b) {
    Pose r;
    r.rotation = (a.rotation * b.rotation).normalized();
    r.translation = a.apply(b.translation);
    r.scale = a.scale * b.scale;
    return r;
}

Pose invert(const Pose& p) {
    Pose r;
    r.rotation = p.rotation.conjugate();
    r.scale = 1.0 / p.scale;
    Vec3 t = r.rotation.rotate(p.translation);
    r.translation = t * (-r.scale);
    return r;
}

FrameTree::FrameTree() { frames_[kWorld] = {std::nullopt, Pose::identity()}; }

FrameTree FrameTree::with_frame(const std::string& id, const std::string& parent,
                                const Pose& pose) const {
    if (frames_.count(id))
        throw Error("DUPLICATE_FRAME", "frame already registered: " + id);
    if (!frames_.count(parent))
        throw Error("UNKNOWN_PARENT", "unknown parent frame: " + parent);
    FrameTree next = *this;
    next.frames_[id] = {parent, pose};
    return next;
}

bool FrameTree::has_frame(const std::string& id) const {
    return frames_.count(id) != 0;
}

Pose FrameTree::world_pose(const std::string& frame) const {
    auto it = frames_.find(frame);
    if (it == frames_.end())
        throw Error("UNKNOWN_FRAME", "unknown frame: " + frame);
    Pose acc = Pose::identity();
    const std::string* cur = &frame;
    while (true) {
        const auto& [parent, pose] = frames_.at(*cur);
        acc = compose(pose, acc);
        if (!parent) break;
        cur = &*parent;
    }
    return acc;
}

Vec3 FrameTree::resolve(const Vec3& position, const std::string& from,
                        const std::string& to) const {
    Pose world_from_src = world_pose(from);
    Pose world_from_dst = world_pose(to);
    return compose(invert(world_from_dst), world_from_src).apply(position);
}

double distance(const FrameTree& tree, const CoordinateValue& a,
                const CoordinateValue& b) {
    Vec3 wa = tree.resolve(a.position, a.frame, FrameTree::kWorld);
    Vec3 wb = tree.resolve(b.position, b.frame, FrameTree::kWorld);
    return (wa - wb).norm();
}

} // namespace scm
