#ifndef SCM_IO_HPP
#define SCM_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scm/anchoring.hpp"
#include "scm/expr.hpp"
#include "scm/geometry.hpp"
#include "scm/kernel.hpp"

namespace scm::io {

inline constexpr const char* kFormatVersion = "1";

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A parsed top-level document: exactly one of the payloads is set.
struct Document {
    std::optional<Metamodel> metamodel;
    std::optional<ModelInstance> model;
    std::optional<std::vector<Placement>> scene;
};

// Throws ParseError (1-based line/column) or Error(UNSUPPORTED_VERSION).
// Metamodels come back with builtins attached; semantic validation is the
// caller's job.
Document parse_document(const std::string& text);

// Canonical form: sorted keys, entity arrays sorted by id/uuid, numbers with
// up to 12 significant digits, LF newlines, trailing newline.
std::string serialize_document(const Metamodel& mm);
std::string serialize_document(const ModelInstance& model);
std::string serialize_document(const std::vector<Placement>& scene);

std::string serialize_report(const std::vector<Violation>& report);

// Frames file: {"frames":[{"id":..,"parent":..,"pose":{..}}]}
FrameTree parse_frames(const std::string& text);

// Context file: flat object of identifier -> number|text|boolean.
expr::Context parse_context(const std::string& text);

} // namespace scm::io

#endif
