#ifndef SCM_FIELD_HPP
#define SCM_FIELD_HPP

#include "scm/geometry.hpp"
#include "scm/values.hpp"

namespace scm {

// Builds a grid FieldSpec over axis-aligned bounds. Samples are in x-fastest
// order; counts must be >= 2 per axis.
// Throws SHAPE_MISMATCH, DEGENERATE_BOUNDS.
FieldSpec field_from_grid(const Vec3& bounds_min, const Vec3& bounds_max,
                          const std::array<std::size_t, 3>& counts,
                          std::vector<double> samples,
                          const std::string& frame = FrameTree::kWorld,
                          const std::string& value_unit = "");

FieldSpec field_from_expression(const std::string& expression,
                                const std::string& frame = FrameTree::kWorld,
                                const std::string& value_unit = "");

// Evaluates the field at a position. The position is resolved into the
// field's frame first. Grid fields interpolate trilinearly and reject
// positions outside the bounds.
// Throws OUT_OF_BOUNDS, EXPRESSION_ERROR, UNKNOWN_FRAME.
double evaluate_field(const FieldSpec& spec, const FrameTree& tree,
                      const CoordinateValue& at);

} // namespace scm

#endif
