#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scm/anchoring.hpp"
#include "scm/error.hpp"
#include "scm/io.hpp"
#include "scm/query.hpp"
#include "scm/temporal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw scm::Error("IO_ERROR", "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

scm::Metamodel load_metamodel(const std::string& path) {
    auto doc = scm::io::parse_document(read_file(path));
    if (!doc.metamodel)
        throw scm::Error("PARSE_ERROR", path + " is not a metamodel document");
    return std::move(*doc.metamodel);
}

scm::ModelInstance load_model(const std::string& path) {
    auto doc = scm::io::parse_document(read_file(path));
    if (!doc.model)
        throw scm::Error("PARSE_ERROR", path + " is not a model document");
    return std::move(*doc.model);
}

// canonical single-value result document
void print_result(const nlohmann::json& value) {
    nlohmann::json j{{"format_version", scm::io::kFormatVersion},
                     {"result", value}};
    std::cout << j.dump(2) << "\n";
}

int report_and_exit(const std::vector<scm::Violation>& report) {
    std::cout << scm::io::serialize_report(report);
    return report.empty() ? kExitOk : kExitViolations;
}

int run(int argc, char** argv) {
    CLI::App app{"Spatial conceptual modeling engine"};
    app.require_subcommand(1);

    std::string model_path, mm_path, context_path, frames_path, out_path;
    std::string op, a, b, weight = "euclidean";
    double tol = 0.0, radius = 0.0;

    auto* vmm = app.add_subcommand("validate-metamodel",
                                   "Check metamodel well-formedness");
    vmm->add_option("file", mm_path)->required();

    auto* vm = app.add_subcommand("validate-model",
                                  "Check model conformance to a metamodel");
    vm->add_option("file", model_path)->required();
    vm->add_option("--metamodel", mm_path)->required();

    auto* cl = app.add_subcommand("classify-level",
                                  "Report the model's anchoring level (0-4)");
    cl->add_option("file", model_path)->required();
    cl->add_option("--metamodel", mm_path)->required();

    auto* q = app.add_subcommand("query", "Spatial/temporal queries");
    q->add_option("file", model_path)->required();
    q->add_option("--metamodel", mm_path)->required();
    q->add_option("--op", op)
        ->required()
        ->check(CLI::IsMember({"is-at", "is-in", "distance", "within-radius",
                               "shortest-path", "when"}));
    q->add_option("--a", a);
    q->add_option("--b", b);
    q->add_option("--tol", tol);
    q->add_option("--radius", radius);
    q->add_option("--weight", weight);
    q->add_option("--frames", frames_path);

    auto* rs = app.add_subcommand("resolve-scene",
                                  "Resolve anchor placements for a context");
    rs->add_option("file", model_path)->required();
    rs->add_option("--metamodel", mm_path)->required();
    rs->add_option("--context", context_path);
    rs->add_option("--frames", frames_path);
    rs->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (vmm->parsed()) {
        return report_and_exit(scm::validate_metamodel(load_metamodel(mm_path)));
    }

    scm::Metamodel mm = load_metamodel(mm_path);
    scm::ModelInstance model = load_model(model_path);
    scm::FrameTree tree;
    if (!frames_path.empty()) tree = scm::io::parse_frames(read_file(frames_path));

    if (vm->parsed()) return report_and_exit(scm::validate_model(model, mm));

    if (cl->parsed()) {
        auto report = scm::validate_model(model, mm);
        if (!report.empty()) return report_and_exit(report);
        print_result((int)scm::classify_anchoring_level(model, mm));
        return kExitOk;
    }

    if (q->parsed()) {
        if (op == "is-at") {
            print_result(scm::is_at(model, tree, a, b, tol));
        } else if (op == "is-in") {
            print_result(scm::is_in(model, tree, a, b));
        } else if (op == "distance") {
            auto pos = [&](const std::string& uuid) {
                const scm::ObjectInstance* obj = model.find_object(uuid);
                if (!obj) throw scm::Error("UNKNOWN_OBJECT", "no object " + uuid);
                scm::Pose world = scm::object_world_pose(*obj, tree);
                return scm::CoordinateValue{scm::FrameTree::kWorld,
                                            world.translation};
            };
            print_result(scm::distance(tree, pos(a), pos(b)));
        } else if (op == "within-radius") {
            const scm::ObjectInstance* obj = model.find_object(a);
            if (!obj) throw scm::Error("UNKNOWN_OBJECT", "no object " + a);
            scm::CoordinateValue center{scm::FrameTree::kWorld,
                                        scm::object_world_pose(*obj, tree).translation};
            print_result(scm::within_radius(model, tree, center, radius));
        } else if (op == "shortest-path") {
            auto result = scm::shortest_path(model, mm, tree, a, b, weight);
            if (!result) {
                print_result(nlohmann::json{{"no_path", true}});
            } else {
                print_result(nlohmann::json{{"path", result->path},
                                            {"length", result->length}});
            }
        } else if (op == "when") {
            const scm::ObjectInstance* obj = model.find_object(a);
            if (!obj) throw scm::Error("UNKNOWN_OBJECT", "no object " + a);
            print_result(scm::when(scm::event_from_object(*obj)));
        }
        return kExitOk;
    }

    if (rs->parsed()) {
        auto report = scm::validate_model(model, mm);
        if (!report.empty()) return report_and_exit(report);
        scm::expr::Context ctx;
        if (!context_path.empty())
            ctx = scm::io::parse_context(read_file(context_path));
        auto scene = scm::resolve_scene(model, mm, tree, ctx);
        std::string text = scm::io::serialize_document(scene);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw scm::Error("IO_ERROR", "cannot write " + out_path);
            out << text;
        }
        std::cout << text;
        return kExitOk;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scm::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const scm::expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const scm::Error& e) {
        if (e.code() == "UNSUPPORTED_VERSION" || e.code() == "PARSE_ERROR") {
            std::cerr << e.what() << "\n";
            return kExitParse;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
