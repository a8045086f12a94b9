#include <doctest.h>

#include <random>

#include "scm/error.hpp"
#include "scm/temporal.hpp"
#include "test_support.hpp"

using namespace scm;
using namespace scm::test;

namespace {

EventInterval ev(std::int64_t start, std::int64_t duration) {
    return {"e", start, duration};
}

struct AllenCase {
    const char* name;
    bool match;
};

// the classic endpoint definitions; point intervals can satisfy several, so
// equality-based relations take precedence in this listed order
std::array<AllenCase, 13> allen_cases(std::int64_t as, std::int64_t ae,
                                      std::int64_t bs, std::int64_t be) {
    return {{{"equals", as == bs && ae == be},
             {"starts", as == bs && ae < be},
             {"started-by", as == bs && ae > be},
             {"finishes", ae == be && as > bs},
             {"finished-by", ae == be && as < bs},
             {"during", as > bs && ae < be},
             {"contains", as < bs && ae > be},
             {"before", ae < bs},
             {"meets", ae == bs},
             {"overlaps", as < bs && bs < ae && ae < be},
             {"after", as > be},
             {"met-by", as == be},
             {"overlapped-by", bs < as && as < be && be < ae}}};
}

const char* allen_oracle(std::int64_t as, std::int64_t ae, std::int64_t bs,
                         std::int64_t be) {
    for (const auto& c : allen_cases(as, ae, bs, be))
        if (c.match) return c.name;
    return "?";
}

} // namespace

TEST_CASE("when") {
    CHECK(when(ev(1700000000, 0)) == 1700000000);
    CHECK(when(ev(1700000000, 0)) == when(ev(1700000000, 60)));
    EventInterval none{"e", std::nullopt, 5};
    CHECK_THROWS_AS(when(none), Error);
}

TEST_CASE("infer_relation closed cases") {
    CHECK(infer_relation(ev(0, 5), ev(5, 5)) == AllenRelation::Meets);
    CHECK(infer_relation(ev(0, 10), ev(2, 2)) == AllenRelation::Contains);
    CHECK(infer_relation(ev(2, 2), ev(0, 10)) == AllenRelation::During);
    CHECK(infer_relation(ev(0, 3), ev(10, 1)) == AllenRelation::Before);
    CHECK(infer_relation(ev(0, 5), ev(0, 5)) == AllenRelation::Equals);
    CHECK(infer_relation(ev(0, 5), ev(0, 9)) == AllenRelation::Starts);
    CHECK(infer_relation(ev(4, 6), ev(0, 10)) == AllenRelation::Finishes);
    CHECK(infer_relation(ev(0, 5), ev(3, 5)) == AllenRelation::Overlaps);

    EventInterval no_duration{"e", 0, std::nullopt};
    CHECK_THROWS_AS(infer_relation(no_duration, ev(0, 1)), Error);
}

TEST_CASE("random intervals match the endpoint oracle and converse table") {
    std::mt19937 rng(211);
    std::uniform_int_distribution<std::int64_t> start(-20, 20), dur(0, 15);
    for (int i = 0; i < 10000; ++i) {
        EventInterval a = ev(start(rng), dur(rng));
        EventInterval b = ev(start(rng), dur(rng));
        AllenRelation r = infer_relation(a, b);
        CHECK(allen_name(r) ==
              std::string(allen_oracle(*a.start, *a.start + *a.duration,
                                       *b.start, *b.start + *b.duration)));
        CHECK(infer_relation(b, a) == allen_converse(r));
        CHECK(allen_from_name(allen_name(r)) == r);
        // for proper intervals exactly one of the 13 definitions holds
        if (*a.duration > 0 && *b.duration > 0) {
            int matches = 0;
            for (const auto& c :
                 allen_cases(*a.start, *a.start + *a.duration, *b.start,
                             *b.start + *b.duration))
                if (c.match) ++matches;
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("check_temporal_consistency") {
    Metamodel mm = make_workshop_metamodel();
    ModelInstance m;
    m.id = "m";
    m.model_type = "workshop";

    auto event = [&](std::optional<std::int64_t> start,
                     std::optional<std::int64_t> duration) {
        ObjectInstance& o = create_object(m, mm, "op_event");
        if (start)
            o.values[builtin::kEventStart] = {Value{Timestamp{*start}}};
        if (duration)
            o.values[builtin::kEventDuration] = {Value{Duration{*duration}}};
        return o.uuid;
    };
    auto relate = [&](const std::string& a, const std::string& b,
                      const char* rel) {
        ObjectInstance& o = create_object(m, mm, "sequence",
                                          Value{ObjectRef{a}}, Value{ObjectRef{b}});
        o.values[builtin::kTemporalRelation] = {Value{std::string(rel)}};
        return o.uuid;
    };

    SUBCASE("before cycle") {
        std::string a = event({}, {}), b = event({}, {});
        relate(a, b, "before");
        relate(b, a, "before");
        auto report = check_temporal_consistency(m, mm);
        REQUIRE(report.size() == 1);
        CHECK(report[0].code == "CYCLE");
    }
    SUBCASE("consistent assertion") {
        std::string a = event(0, 5), b = event(5, 5);
        relate(a, b, "meets");
        CHECK(check_temporal_consistency(m, mm).empty());
    }
    SUBCASE("contradiction against timestamps") {
        std::string a = event(0, 5), b = event(100, 5);
        relate(a, b, "meets");
        auto report = check_temporal_consistency(m, mm);
        REQUIRE(report.size() == 1);
        CHECK(report[0].code == "CONTRADICTION");
    }
    SUBCASE("participation never affects consistency") {
        std::string a = event(0, 5), b = event(100, 5);
        relate(a, b, "before");
        auto before = check_temporal_consistency(m, mm);
        std::string step = create_object(m, mm, "step").uuid;
        create_object(m, mm, "involvement", Value{ObjectRef{a}},
                      Value{ObjectRef{step}});
        auto after = check_temporal_consistency(m, mm);
        CHECK(before.size() == after.size());
    }
    SUBCASE("random relation sets vs brute force on <=5 events") {
        std::mt19937 rng(223);
        std::uniform_int_distribution<std::int64_t> start(0, 30), dur(0, 10);
        std::uniform_int_distribution<int> pick_rel(0, 12);
        for (int trial = 0; trial < 200; ++trial) {
            ModelInstance mt;
            mt.id = "t";
            mt.model_type = "workshop";
            std::vector<std::string> evs;
            std::vector<EventInterval> ivs;
            int n = 2 + int(rng() % 4);
            for (int i = 0; i < n; ++i) {
                ObjectInstance& o = create_object(mt, mm, "op_event");
                std::int64_t s = start(rng), d = dur(rng);
                o.values[builtin::kEventStart] = {Value{Timestamp{s}}};
                o.values[builtin::kEventDuration] = {Value{Duration{d}}};
                evs.push_back(o.uuid);
                ivs.push_back({o.uuid, s, d});
            }
            bool expect_contradiction = false;
            int edges = 1 + int(rng() % 4);
            for (int e = 0; e < edges; ++e) {
                int i = int(rng() % n), j = int(rng() % n);
                AllenRelation asserted = AllenRelation(pick_rel(rng));
                ObjectInstance& o =
                    create_object(mt, mm, "sequence", Value{ObjectRef{evs[i]}},
                                  Value{ObjectRef{evs[j]}});
                o.values[builtin::kTemporalRelation] = {
                    Value{std::string(allen_name(asserted))}};
                if (std::string(allen_oracle(
                        *ivs[i].start, *ivs[i].start + *ivs[i].duration,
                        *ivs[j].start, *ivs[j].start + *ivs[j].duration)) !=
                    allen_name(asserted))
                    expect_contradiction = true;
            }
            auto report = check_temporal_consistency(mt, mm);
            bool got_contradiction = false;
            for (const auto& v : report)
                if (v.code == "CONTRADICTION") got_contradiction = true;
            CHECK(got_contradiction == expect_contradiction);
        }
    }
}
