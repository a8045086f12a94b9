#include <doctest.h>

#include <algorithm>
#include <random>

#include "scm/error.hpp"
#include "scm/query.hpp"
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

    std::string machine(double x, double y, double z,
                        std::optional<ExtentBox> extent = {}) {
        std::string id = create_object(m, mm, "machine").uuid;
        set_position(m, mm, id, x, y, z);
        if (extent)
            set_value(m, mm, id, builtin::kVizrepExtent, {Value{*extent}});
        return id;
    }
    std::string waypoint(double x, double y, double z) {
        std::string id = create_object(m, mm, "waypoint").uuid;
        set_position(m, mm, id, x, y, z);
        return id;
    }
    std::string corridor(const std::string& u, const std::string& v,
                         std::optional<double> length = {}) {
        ObjectInstance& o = create_object(m, mm, "corridor", Value{ObjectRef{u}},
                                          Value{ObjectRef{v}});
        if (length) o.values["length"] = {Value{*length}};
        return o.uuid;
    }
};

// brute-force gap distance by sampling is too weak; instead compute the
// distance between two boxes as the norm of the clamped center offset,
// derived per axis from interval arithmetic
double box_gap_oracle(const Aabb& a, const Aabb& b) {
    auto axis = [](double amin, double amax, double bmin, double bmax) {
        if (amax < bmin) return bmin - amax;
        if (bmax < amin) return amin - bmax;
        return 0.0; // overlapping intervals
    };
    double gx = axis(a.min.x, a.max.x, b.min.x, b.max.x);
    double gy = axis(a.min.y, a.max.y, b.min.y, b.max.y);
    double gz = axis(a.min.z, a.max.z, b.min.z, b.max.z);
    return std::sqrt(gx * gx + gy * gy + gz * gz);
}

Aabb random_box(std::mt19937& rng) {
    std::uniform_real_distribution<double> c(-10, 10), h(0.1, 4);
    Vec3 center{c(rng), c(rng), c(rng)};
    Vec3 half{h(rng), h(rng), h(rng)};
    return {center - half, center + half};
}

// exhaustive simple-path search, minimal (length, node sequence)
struct PathOracle {
    const std::map<std::string, std::vector<std::pair<std::string, double>>>& adj;
    std::optional<PathResult> best;

    void dfs(std::vector<std::string>& path, double len,
             const std::string& target) {
        if (path.back() == target) {
            if (!best || len < best->length ||
                (len == best->length && path < best->path))
                best = PathResult{path, len};
            return;
        }
        auto it = adj.find(path.back());
        if (it == adj.end()) return;
        for (const auto& [next, w] : it->second) {
            if (std::find(path.begin(), path.end(), next) != path.end())
                continue;
            path.push_back(next);
            dfs(path, len + w, target);
            path.pop_back();
        }
    }
};

std::optional<PathResult> path_oracle(
    const std::map<std::string, std::vector<std::pair<std::string, double>>>& adj,
    const std::string& s, const std::string& t) {
    PathOracle o{adj, {}};
    std::vector<std::string> path{s};
    o.dfs(path, 0, t);
    return o.best;
}

} // namespace

TEST_CASE("world_aabb") {
    Fixture f;
    FrameTree tree;

    SUBCASE("positions without extent give point boxes") {
        std::string a = f.machine(1, 2, 3);
        Aabb box = world_aabb(f.m, tree, a);
        CHECK(box.min.x == 1);
        CHECK(box.max.z == 3);
        CHECK((box.max - box.min).norm() == 0);
    }
    SUBCASE("extents follow the object's pose") {
        std::string a = f.machine(10, 0, 0, ExtentBox{{0, 0, 0}, {1, 2, 3}});
        Aabb box = world_aabb(f.m, tree, a);
        CHECK(box.min.x == doctest::Approx(9));
        CHECK(box.max.x == doctest::Approx(11));
        CHECK(box.min.y == doctest::Approx(-2));
        CHECK(box.max.z == doctest::Approx(3));
    }
    SUBCASE("rotation by 90 degrees about z swaps x/y half sizes") {
        std::string a = f.machine(0, 0, 0, ExtentBox{{0, 0, 0}, {1, 2, 3}});
        set_value(f.m, f.mm, a, builtin::kTransformRotation,
                  {Value{quat_from_euler_xyz(0, 0, M_PI / 2)}});
        Aabb box = world_aabb(f.m, tree, a);
        CHECK(box.max.x == doctest::Approx(2));
        CHECK(box.max.y == doctest::Approx(1));
        CHECK(box.max.z == doctest::Approx(3));
    }
    SUBCASE("missing position") {
        std::string a = create_object(f.m, f.mm, "machine").uuid;
        CHECK_THROWS_WITH_AS(world_aabb(f.m, tree, a),
                             doctest::Contains("position"), Error);
        CHECK_THROWS_AS(world_aabb(f.m, tree, "nope"), Error);
    }
}

TEST_CASE("aabb_distance matches interval-gap oracle") {
    std::mt19937 rng(401);
    for (int i = 0; i < 1000; ++i) {
        Aabb a = random_box(rng), b = random_box(rng);
        double got = aabb_distance(a, b);
        CHECK(got == doctest::Approx(box_gap_oracle(a, b)).epsilon(1e-12));
        // symmetry and identity
        CHECK(aabb_distance(b, a) == got);
        CHECK(aabb_distance(a, a) == 0);
    }
}

TEST_CASE("is_at") {
    Fixture f;
    FrameTree tree;
    std::string a = f.machine(0, 0, 0, ExtentBox{{0, 0, 0}, {1, 1, 1}});
    std::string b = f.machine(2, 0, 0, ExtentBox{{0, 0, 0}, {1, 1, 1}});
    std::string c = f.machine(5, 0, 0, ExtentBox{{0, 0, 0}, {1, 1, 1}});

    CHECK(is_at(f.m, tree, a, b, 0));        // touching faces
    CHECK_FALSE(is_at(f.m, tree, a, c, 2));  // gap is 3
    CHECK(is_at(f.m, tree, a, c, 3));
    CHECK(is_at(f.m, tree, a, c, 3.5));
    // symmetric
    CHECK(is_at(f.m, tree, c, a, 3) == is_at(f.m, tree, a, c, 3));
}

TEST_CASE("is_in") {
    Fixture f;
    FrameTree tree;
    std::string room = f.machine(0, 0, 0, ExtentBox{{0, 0, 0}, {5, 5, 5}});
    std::string inside = f.machine(1, 1, 1, ExtentBox{{0, 0, 0}, {1, 1, 1}});
    std::string sticking_out = f.machine(4.5, 0, 0, ExtentBox{{0, 0, 0}, {1, 1, 1}});
    std::string point = f.machine(2, 2, 2);

    CHECK(is_in(f.m, tree, inside, room));
    CHECK_FALSE(is_in(f.m, tree, sticking_out, room));
    CHECK(is_in(f.m, tree, point, room));
    CHECK(is_in(f.m, tree, room, room)); // closed containment is reflexive
    // boundary contact still counts
    std::string flush = f.machine(4, 0, 0, ExtentBox{{0, 0, 0}, {1, 1, 1}});
    CHECK(is_in(f.m, tree, flush, room));

    CHECK_THROWS_WITH_AS(is_in(f.m, tree, inside, point),
                         doctest::Contains("extent"), Error);
}

TEST_CASE("is_in random property: containment implies zero distance") {
    std::mt19937 rng(409);
    std::uniform_real_distribution<double> u(-8, 8), h(0.5, 3);
    for (int i = 0; i < 300; ++i) {
        Fixture f;
        FrameTree tree;
        std::string big =
            f.machine(u(rng), u(rng), u(rng),
                      ExtentBox{{0, 0, 0}, {h(rng) + 3, h(rng) + 3, h(rng) + 3}});
        std::string small =
            f.machine(u(rng), u(rng), u(rng), ExtentBox{{0, 0, 0}, {h(rng), h(rng), h(rng)}});
        Aabb inner = world_aabb(f.m, tree, small);
        Aabb outer = world_aabb(f.m, tree, big);
        bool expected = inner.min.x >= outer.min.x && inner.max.x <= outer.max.x &&
                        inner.min.y >= outer.min.y && inner.max.y <= outer.max.y &&
                        inner.min.z >= outer.min.z && inner.max.z <= outer.max.z;
        CHECK(is_in(f.m, tree, small, big) == expected);
        if (expected) CHECK(is_at(f.m, tree, small, big, 0));
    }
}

TEST_CASE("within_radius") {
    Fixture f;
    FrameTree tree;
    std::string near = f.machine(1, 0, 0);
    std::string edge = f.machine(0, 5, 0);
    std::string far = f.machine(10, 0, 0);
    create_object(f.m, f.mm, "step"); // no position: skipped, not an error

    auto hits = within_radius(f.m, tree, {"world", {0, 0, 0}}, 5);
    std::vector<std::string> expected{near, edge};
    std::sort(expected.begin(), expected.end());
    CHECK(hits == expected);
    CHECK(std::is_sorted(hits.begin(), hits.end()));
    CHECK(within_radius(f.m, tree, {"world", {0, 0, 0}}, 100).size() == 3);
    CHECK(within_radius(f.m, tree, {"world", {0, 0, 0}}, 0.5).empty());
    (void)far;
}

TEST_CASE("within_radius random property vs linear scan") {
    std::mt19937 rng(419);
    std::uniform_real_distribution<double> u(-10, 10), rad(0, 15);
    for (int trial = 0; trial < 50; ++trial) {
        Fixture f;
        FrameTree tree;
        std::vector<std::pair<std::string, Vec3>> pts;
        for (int i = 0; i < 20; ++i) {
            Vec3 p{u(rng), u(rng), u(rng)};
            pts.push_back({f.machine(p.x, p.y, p.z), p});
        }
        Vec3 c{u(rng), u(rng), u(rng)};
        double r1 = rad(rng), r2 = r1 + rad(rng);
        auto inner = within_radius(f.m, tree, {"world", c}, r1);
        auto outer = within_radius(f.m, tree, {"world", c}, r2);
        std::vector<std::string> expected;
        for (const auto& [id, p] : pts)
            if ((p - c).norm() <= r1) expected.push_back(id);
        std::sort(expected.begin(), expected.end());
        CHECK(inner == expected);
        // monotone in the radius
        CHECK(std::includes(outer.begin(), outer.end(), inner.begin(),
                            inner.end()));
    }
}

TEST_CASE("shortest_path closed cases") {
    Fixture f;
    FrameTree tree;
    std::string a = f.waypoint(0, 0, 0);
    std::string b = f.waypoint(3, 0, 0);
    std::string c = f.waypoint(3, 4, 0);
    std::string d = f.waypoint(100, 0, 0);
    f.corridor(a, b);
    f.corridor(b, c);
    f.corridor(a, c);

    SUBCASE("euclidean weights") {
        auto r = shortest_path(f.m, f.mm, tree, a, c, "euclidean");
        REQUIRE(r.has_value());
        CHECK(r->length == doctest::Approx(5)); // direct 3-4-5 hypotenuse
        CHECK(r->path == std::vector<std::string>{a, c});
        auto self = shortest_path(f.m, f.mm, tree, a, a, "euclidean");
        REQUIRE(self.has_value());
        CHECK(self->length == 0);
        CHECK(self->path == std::vector<std::string>{a});
    }
    SUBCASE("attribute weights can invert the geometry") {
        // direct edge is expensive, the detour wins
        Fixture g;
        std::string u = g.waypoint(0, 0, 0), v = g.waypoint(1, 0, 0),
                    w = g.waypoint(2, 0, 0);
        g.corridor(u, v, 1.0);
        g.corridor(v, w, 1.0);
        g.corridor(u, w, 10.0);
        auto r = shortest_path(g.m, g.mm, tree, u, w, "length");
        REQUIRE(r.has_value());
        CHECK(r->length == doctest::Approx(2));
        CHECK(r->path.size() == 3);
    }
    SUBCASE("equal-cost tie breaks to the smaller uuid sequence") {
        Fixture g;
        std::string s = g.waypoint(0, 0, 0);
        std::string m1 = g.waypoint(1, 1, 0), m2 = g.waypoint(1, -1, 0);
        std::string t = g.waypoint(2, 0, 0);
        g.corridor(s, m1, 1.0);
        g.corridor(s, m2, 1.0);
        g.corridor(m1, t, 1.0);
        g.corridor(m2, t, 1.0);
        auto r = shortest_path(g.m, g.mm, tree, s, t, "length");
        REQUIRE(r.has_value());
        CHECK(r->path == std::vector<std::string>{s, std::min(m1, m2), t});
    }
    SUBCASE("disconnected") {
        CHECK_FALSE(shortest_path(f.m, f.mm, tree, a, d, "euclidean").has_value());
    }
    SUBCASE("error codes") {
        Fixture g;
        std::string u = g.waypoint(0, 0, 0), v = g.waypoint(1, 0, 0);
        g.corridor(u, v, -2.0);
        CHECK_THROWS_WITH_AS(shortest_path(g.m, g.mm, tree, u, v, "length"),
                             doctest::Contains("negative"), Error);
        CHECK_THROWS_AS(shortest_path(g.m, g.mm, tree, u, v, "label"), Error);
        CHECK_THROWS_AS(shortest_path(f.m, f.mm, tree, "nope", a, "euclidean"),
                        Error);
    }
}

TEST_CASE("shortest_path random graphs vs exhaustive enumeration") {
    std::mt19937 rng(421);
    std::uniform_real_distribution<double> coord(-10, 10), wt(0.1, 10);
    FrameTree tree;
    for (int trial = 0; trial < 200; ++trial) {
        Fixture f;
        int n = 3 + int(rng() % 6); // up to 8 nodes
        std::vector<std::string> nodes;
        for (int i = 0; i < n; ++i)
            nodes.push_back(f.waypoint(coord(rng), coord(rng), coord(rng)));
        std::map<std::string, std::vector<std::pair<std::string, double>>> adj;
        int edges = n + int(rng() % n);
        for (int e = 0; e < edges; ++e) {
            int i = int(rng() % n), j = int(rng() % n);
            if (i == j) continue;
            double w = wt(rng);
            f.corridor(nodes[i], nodes[j], w);
            adj[nodes[i]].push_back({nodes[j], w});
            adj[nodes[j]].push_back({nodes[i], w});
        }
        std::string s = nodes[rng() % n], t = nodes[rng() % n];
        auto got = shortest_path(f.m, f.mm, tree, s, t, "length");
        auto want = path_oracle(adj, s, t);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->length == doctest::Approx(want->length).epsilon(1e-9));
            CHECK(got->path.front() == s);
            CHECK(got->path.back() == t);
            // continuous random weights make ties measure-zero, so the
            // minimal path is unique and must match exactly
            CHECK(got->path == want->path);
        }
    }
}
