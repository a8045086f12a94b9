#include <doctest.h>

#include <random>

#include "scm/anchoring.hpp"
#include "scm/error.hpp"
#include "test_support.hpp"

using namespace scm;
using namespace scm::test;

namespace {

struct Fixture {
    Metamodel mm = make_workshop_metamodel();
    ModelInstance m;

    Fixture() {
        m.id = "fixture";
        m.model_type = "workshop";
    }

    std::string step(double x = 0, double y = 0, double z = 0) {
        std::string id = create_object(m, mm, "step").uuid;
        set_position(m, mm, id, x, y, z);
        return id;
    }
    std::string plain_step() { return create_object(m, mm, "step").uuid; }
    std::string real_switch(double x, double y, double z,
                            const std::string& frame = "world") {
        std::string id = create_object(m, mm, "switch").uuid;
        set_position(m, mm, id, x, y, z, frame);
        return id;
    }
};

} // namespace

TEST_CASE("classify_anchoring_level ladder") {
    Fixture f;
    // level 0: nothing spatial
    f.plain_step();
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L0);

    // level 1: a coordinate value, still no anchors
    std::string placed = f.step(1, 2, 3);
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L1);

    // level 2: whole-model anchor to a point of interest
    PoseValue poi;
    poi.pose.translation = {5, 0, 0};
    std::string model_anchor =
        create_anchor(f.m, f.mm, builtin::kModelToken, poi, Pose::identity())
            .uuid;
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L2);

    // level 3: element anchor outranks the model anchor
    std::string sw = f.real_switch(0, 0, 1);
    std::string element_anchor =
        create_anchor(f.m, f.mm, placed, sw, Pose::identity()).uuid;
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L3);

    // level 4: any condition makes it dynamic
    set_value(f.m, f.mm, element_anchor, builtin::kAnchorCondition,
              {Value{std::string("user_zone == 'serverroom'")}});
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L4);

    // monotonicity: removing the condition drops back to 3, never below
    set_value(f.m, f.mm, element_anchor, builtin::kAnchorCondition, {});
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L3);
    delete_object(f.m, element_anchor);
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L2);
    delete_object(f.m, model_anchor);
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L1);
}

TEST_CASE("classify requires a conforming model") {
    Fixture f;
    ObjectInstance& o = create_object(f.m, f.mm, "step");
    o.values.erase(builtin::kUuid);
    CHECK_THROWS_AS(classify_anchoring_level(f.m, f.mm), Error);
}

TEST_CASE("create_anchor argument checking") {
    Fixture f;
    std::string s = f.step();
    std::string sw = f.real_switch(0, 0, 0);

    create_anchor(f.m, f.mm, s, sw, Pose::identity());
    CHECK(classify_anchoring_level(f.m, f.mm) == AnchoringLevel::L3);

    CHECK_THROWS_WITH_AS(create_anchor(f.m, f.mm, sw, sw, Pose::identity()),
                         doctest::Contains("virtual"), Error);
    CHECK_THROWS_AS(create_anchor(f.m, f.mm, s, s, Pose::identity()), Error);
    CHECK_THROWS_AS(create_anchor(f.m, f.mm, "no-such-uuid", sw, Pose::identity()),
                    Error);
    CHECK_THROWS_AS(create_anchor(f.m, f.mm, s, sw, Pose::identity(),
                                  std::string("user_zone ==")),
                    expr::ParseError);
}

TEST_CASE("resolve_scene element anchors") {
    Fixture f;
    FrameTree tree;
    std::string s = f.plain_step();
    std::string sw = f.real_switch(2, 0, 1);

    SUBCASE("identity offset lands on the target") {
        create_anchor(f.m, f.mm, s, sw, Pose::identity());
        auto scene = resolve_scene(f.m, f.mm, tree, {});
        REQUIRE(scene.size() == 1);
        CHECK(scene[0].source == s);
        CHECK((scene[0].pose.translation - Vec3{2, 0, 1}).norm() < 1e-12);
    }
    SUBCASE("offset composes with the target pose") {
        Pose offset;
        offset.translation = {0, 0.5, 0};
        create_anchor(f.m, f.mm, s, sw, offset);
        auto scene = resolve_scene(f.m, f.mm, tree, {});
        REQUIRE(scene.size() == 1);
        CHECK((scene[0].pose.translation - Vec3{2, 0.5, 1}).norm() < 1e-12);
    }
    SUBCASE("frame chains match manual composition") {
        std::mt19937 rng(311);
        Pose room = random_pose(rng), rack = random_pose(rng),
             local = random_pose(rng), offset = random_pose(rng);
        FrameTree t = FrameTree()
                          .with_frame("room", "world", room)
                          .with_frame("rack", "room", rack);
        std::string target = create_object(f.m, f.mm, "machine").uuid;
        set_value(f.m, f.mm, target, builtin::kCoordPosition,
                  {Value{CoordinateValue{"rack", local.translation}}});
        set_value(f.m, f.mm, target, builtin::kTransformRotation,
                  {Value{local.rotation}});
        set_value(f.m, f.mm, target, builtin::kTransformScale,
                  {Value{local.scale}});
        create_anchor(f.m, f.mm, s, target, offset);
        auto scene = resolve_scene(f.m, f.mm, t, {});
        REQUIRE(scene.size() == 1);
        Pose expected =
            compose(compose(compose(room, rack), local), offset);
        CHECK(test::mat_diff(test::pose_matrix(scene[0].pose),
                             test::pose_matrix(expected)) < 1e-9);
    }
}

TEST_CASE("resolve_scene conditional anchors") {
    Fixture f;
    FrameTree tree;
    std::string shown = f.plain_step();
    std::string hidden = f.plain_step();
    std::string sw = f.real_switch(1, 1, 1);
    create_anchor(f.m, f.mm, shown, sw, Pose::identity());
    create_anchor(f.m, f.mm, hidden, sw, Pose::identity(),
                  std::string("user_zone == 'serverroom'"));

    auto lobby = resolve_scene(f.m, f.mm, tree,
                               {{"user_zone", std::string("lobby")}});
    REQUIRE(lobby.size() == 1);
    CHECK(lobby[0].source == shown);

    auto server = resolve_scene(f.m, f.mm, tree,
                                {{"user_zone", std::string("serverroom")}});
    CHECK(server.size() == 2);

    // missing variable propagates with the anchor uuid
    try {
        resolve_scene(f.m, f.mm, tree, {});
        FAIL("expected UNKNOWN_VARIABLE");
    } catch (const Error& e) {
        CHECK(e.code() == "UNKNOWN_VARIABLE");
        CHECK(std::string(e.what()).find("anchor") != std::string::npos);
    }
}

TEST_CASE("model-level anchors place every virtual object") {
    Fixture f;
    FrameTree tree;
    std::string a = f.step(1, 0, 0);
    std::string b = f.step(0, 1, 0);
    f.real_switch(9, 9, 9); // real objects are never placed

    PoseValue poi;
    poi.pose.translation = {10, 0, 0};
    create_anchor(f.m, f.mm, builtin::kModelToken, poi, Pose::identity());

    auto scene = resolve_scene(f.m, f.mm, tree, {});
    REQUIRE(scene.size() == 2);
    // sorted by source uuid, each virtual object offset by its local pose
    CHECK(scene[0].source == std::min(a, b));
    for (const auto& p : scene) {
        const ObjectInstance* obj = f.m.find_object(p.source);
        REQUIRE(obj != nullptr);
        Pose expected = compose(poi.pose, object_local_pose(*obj));
        CHECK(test::mat_diff(test::pose_matrix(p.pose),
                             test::pose_matrix(expected)) < 1e-12);
    }
}

TEST_CASE("condition-free scenes ignore the context") {
    Fixture f;
    FrameTree tree;
    std::string s = f.plain_step();
    std::string sw = f.real_switch(0, 0, 2);
    create_anchor(f.m, f.mm, s, sw, Pose::identity());

    auto empty_ctx = resolve_scene(f.m, f.mm, tree, {});
    auto rich_ctx = resolve_scene(f.m, f.mm, tree,
                                  {{"user_zone", std::string("anywhere")},
                                   {"hour", 13.0}});
    REQUIRE(empty_ctx.size() == rich_ctx.size());
    for (std::size_t i = 0; i < empty_ctx.size(); ++i) {
        CHECK(empty_ctx[i].source == rich_ctx[i].source);
        CHECK((empty_ctx[i].pose.translation - rich_ctx[i].pose.translation)
                  .norm() == 0);
    }
}

TEST_CASE("vizrep values are echoed into placements") {
    Fixture f;
    FrameTree tree;
    std::string s = f.plain_step();
    set_value(f.m, f.mm, s, builtin::kVizrepAsset,
              {Value{std::string("models/arrow.glb")}});
    std::string sw = f.real_switch(0, 0, 0);
    create_anchor(f.m, f.mm, s, sw, Pose::identity());
    auto scene = resolve_scene(f.m, f.mm, tree, {});
    REQUIRE(scene.size() == 1);
    REQUIRE(scene[0].vizrep.count(builtin::kVizrepAsset));
    CHECK(std::get<std::string>(
              scene[0].vizrep.at(builtin::kVizrepAsset).front()) ==
          "models/arrow.glb");
}
