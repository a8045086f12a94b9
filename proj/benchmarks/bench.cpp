#include <benchmark/benchmark.h>

#include <random>

#include "scm/anchoring.hpp"
#include "scm/expr.hpp"
#include "scm/field.hpp"
#include "scm/io.hpp"
#include "scm/query.hpp"

using namespace scm;

namespace {

Pose random_pose(std::mt19937& rng) {
    std::uniform_real_distribution<double> t(-10, 10), ang(-3.14, 3.14);
    Pose p;
    p.translation = {t(rng), t(rng), t(rng)};
    p.rotation = quat_from_euler_xyz(ang(rng), ang(rng), ang(rng));
    return p;
}

Metamodel workshop() {
    // minimal language exercised by the benchmarks
    Metamodel mm;
    mm.id = "bench";
    ModelType mt;
    mt.id = "w";
    mt.object_types.push_back({"machine", "Machine", ObjectKind::Real, {}});
    mt.object_types.push_back({"waypoint", "Waypoint", ObjectKind::Node, {}});
    EndpointSpec corridor_ends;
    corridor_ends.source_kinds = {ObjectKind::Node};
    corridor_ends.target_kinds = {ObjectKind::Node};
    mt.object_types.push_back(
        {"corridor", "Corridor", ObjectKind::Edge, corridor_ends});
    mt.data_types.push_back({"dt.real", DataKind::Real, {}});
    mt.attributes.push_back({"length", "Length", false});
    mm.model_types.push_back(mt);
    mm.domain_map["length"] = {"corridor"};
    mm.range_map["length"] = {RangeSpec::Kind::DataTypeId, DataKind::Text,
                              "dt.real"};
    mm.card_map["length"] = {0, 1};
    attach_builtins(mm);
    return mm;
}

void bm_pose_compose(benchmark::State& state) {
    std::mt19937 rng(1);
    Pose a = random_pose(rng), b = random_pose(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(a, b));
    }
}
BENCHMARK(bm_pose_compose);

void bm_frame_resolution(benchmark::State& state) {
    std::mt19937 rng(2);
    FrameTree tree;
    std::string parent = FrameTree::kWorld;
    for (int i = 0; i < 8; ++i) {
        std::string id = "f" + std::to_string(i);
        tree = tree.with_frame(id, parent, random_pose(rng));
        parent = id;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree.world_pose(parent));
    }
}
BENCHMARK(bm_frame_resolution);

void bm_field_grid_eval(benchmark::State& state) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> v(-10, 10), u(0, 1);
    std::vector<double> samples(16 * 16 * 16);
    for (double& s : samples) s = v(rng);
    FieldSpec f = field_from_grid({0, 0, 0}, {1, 1, 1}, {16, 16, 16}, samples);
    FrameTree tree;
    Vec3 p{u(rng), u(rng), u(rng)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_field(f, tree, {"world", p}));
    }
}
BENCHMARK(bm_field_grid_eval);

void bm_condition_eval(benchmark::State& state) {
    auto ast = expr::parse(
        "(user_zone == 'serverroom' and clearance >= 2) or override == true");
    expr::Context ctx{{"user_zone", std::string("serverroom")},
                      {"clearance", 3.0},
                      {"override", false}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(expr::evaluate_condition(*ast, ctx));
    }
}
BENCHMARK(bm_condition_eval);

void bm_validate_model(benchmark::State& state) {
    Metamodel mm = workshop();
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> t(-50, 50);
    ModelInstance m;
    m.id = "bench";
    m.model_type = "w";
    for (int i = 0; i < int(state.range(0)); ++i) {
        ObjectInstance& o = create_object(m, mm, "machine");
        o.values[builtin::kCoordPosition] = {
            Value{CoordinateValue{"world", {t(rng), t(rng), t(rng)}}}};
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_model(m, mm));
    }
}
BENCHMARK(bm_validate_model)->Arg(10)->Arg(100)->Arg(1000);

void bm_shortest_path(benchmark::State& state) {
    Metamodel mm = workshop();
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> w(0.1, 10), t(-50, 50);
    ModelInstance m;
    m.id = "bench";
    m.model_type = "w";
    int n = int(state.range(0));
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) {
        ObjectInstance& o = create_object(m, mm, "waypoint");
        o.values[builtin::kCoordPosition] = {
            Value{CoordinateValue{"world", {t(rng), t(rng), t(rng)}}}};
        nodes.push_back(o.uuid);
    }
    for (int e = 0; e < 4 * n; ++e) {
        int i = int(rng() % n), j = int(rng() % n);
        if (i == j) continue;
        ObjectInstance& o = create_object(m, mm, "corridor",
                                          Value{ObjectRef{nodes[i]}},
                                          Value{ObjectRef{nodes[j]}});
        o.values["length"] = {Value{w(rng)}};
    }
    FrameTree tree;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            shortest_path(m, mm, tree, nodes.front(), nodes.back(), "length"));
    }
}
BENCHMARK(bm_shortest_path)->Arg(50)->Arg(500);

void bm_serialize_model(benchmark::State& state) {
    Metamodel mm = workshop();
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> t(-50, 50);
    ModelInstance m;
    m.id = "bench";
    m.model_type = "w";
    for (int i = 0; i < 200; ++i) {
        ObjectInstance& o = create_object(m, mm, "machine");
        o.values[builtin::kCoordPosition] = {
            Value{CoordinateValue{"world", {t(rng), t(rng), t(rng)}}}};
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(io::serialize_document(m));
    }
}
BENCHMARK(bm_serialize_model);

} // namespace

BENCHMARK_MAIN();
