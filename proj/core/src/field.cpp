#include "scm/field.hpp"

#include <cmath>

#include "scm/error.hpp"
#include "scm/expr.hpp"

namespace scm {

FieldSpec field_from_grid(const Vec3& bounds_min, const Vec3& bounds_max,
                          const std::array<std::size_t, 3>& counts,
                          std::vector<double> samples,
                          const std::string& frame,
                          const std::string& value_unit) {
    if (!(bounds_min.x < bounds_max.x && bounds_min.y < bounds_max.y &&
          bounds_min.z < bounds_max.z))
        throw Error("DEGENERATE_BOUNDS", "bounds min must be below max per axis");
    if (counts[0] < 2 || counts[1] < 2 || counts[2] < 2)
        throw Error("SHAPE_MISMATCH", "grid needs at least 2 samples per axis");
    if (samples.size() != counts[0] * counts[1] * counts[2])
        throw Error("SHAPE_MISMATCH",
                    "sample count does not match per-axis counts");
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::Grid;
    spec.bounds_min = bounds_min;
    spec.bounds_max = bounds_max;
    spec.counts = counts;
    spec.samples = std::move(samples);
    spec.frame = frame;
    spec.value_unit = value_unit;
    return spec;
}

FieldSpec field_from_expression(const std::string& expression,
                                const std::string& frame,
                                const std::string& value_unit) {
    expr::parse(expression); // reject malformed input up front
    FieldSpec spec;
    spec.kind = FieldSpec::Kind::Analytic;
    spec.expression = expression;
    spec.frame = frame;
    spec.value_unit = value_unit;
    return spec;
}

namespace {

double interpolate_grid(const FieldSpec& s, const Vec3& p) {
    const double lo[3] = {s.bounds_min.x, s.bounds_min.y, s.bounds_min.z};
    const double hi[3] = {s.bounds_max.x, s.bounds_max.y, s.bounds_max.z};
    const double pos[3] = {p.x, p.y, p.z};
    std::size_t cell[3];
    double frac[3];
    for (int a = 0; a < 3; ++a) {
        if (pos[a] < lo[a] || pos[a] > hi[a])
            throw Error("OUT_OF_BOUNDS", "grid query outside field bounds");
        double step = (hi[a] - lo[a]) / (double)(s.counts[a] - 1);
        double u = (pos[a] - lo[a]) / step;
        std::size_t i = (std::size_t)std::floor(u);
        if (i >= s.counts[a] - 1) i = s.counts[a] - 2; // clamp upper boundary
        cell[a] = i;
        frac[a] = u - (double)i;
    }
    auto sample = [&](std::size_t i, std::size_t j, std::size_t k) {
        return s.samples[i + s.counts[0] * (j + s.counts[1] * k)];
    };
    double acc = 0;
    for (int dz = 0; dz < 2; ++dz)
        for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
                double w = (dx ? frac[0] : 1 - frac[0]) *
                           (dy ? frac[1] : 1 - frac[1]) *
                           (dz ? frac[2] : 1 - frac[2]);
                acc += w * sample(cell[0] + dx, cell[1] + dy, cell[2] + dz);
            }
    return acc;
}

} // namespace

double evaluate_field(const FieldSpec& spec, const FrameTree& tree,
                      const CoordinateValue& at) {
    Vec3 p = tree.resolve(at.position, at.frame, spec.frame);
    if (spec.kind == FieldSpec::Kind::Grid) return interpolate_grid(spec, p);
    expr::NodePtr ast = expr::parse(spec.expression);
    expr::Context ctx{{"x", p.x}, {"y", p.y}, {"z", p.z}};
    return expr::evaluate_numeric(*ast, ctx);
}

} // namespace scm
