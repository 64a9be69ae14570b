#include <map>
#include <set>

#include "doctest.h"
#include "hpt/errors.hpp"
#include "hpt/gadgets.hpp"

using namespace hpt;
using namespace hpt::gadgets;

namespace {

// Independent oracle: raw enumeration of all lambda^free colorings with the
// fixed vertices pinned, projecting the valid ones (no monochromatic
// hyperedge) onto the anchors.
std::set<std::vector<int>> raw_anchor_relation(const ForcingProblem& p) {
    std::vector<int> closure;
    std::map<int, std::size_t> pos;
    auto add = [&](int v) {
        if (pos.emplace(v, closure.size()).second) closure.push_back(v);
    };
    for (int v : p.anchors) add(v);
    for (const auto& [v, c] : p.fixed) add(v);
    for (const auto& e : p.edges)
        for (int v : e) add(v);

    std::vector<int> colors(closure.size(), 0);
    std::vector<std::size_t> free_pos;
    for (std::size_t i = 0; i < closure.size(); ++i) free_pos.push_back(i);
    for (const auto& [v, c] : p.fixed) {
        colors[pos.at(v)] = c;
        free_pos.erase(std::find(free_pos.begin(), free_pos.end(), pos.at(v)));
    }
    REQUIRE(free_pos.size() <= 15);  // raw enumeration guard
    for (std::size_t i : free_pos) colors[i] = 1;

    std::set<std::vector<int>> relation;
    while (true) {
        bool ok = true;
        for (const auto& e : p.edges) {
            int first = colors[pos.at(e[0])];
            bool mono = true;
            for (int v : e)
                if (colors[pos.at(v)] != first) {
                    mono = false;
                    break;
                }
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<int> tuple;
            for (int a : p.anchors) tuple.push_back(colors[pos.at(a)]);
            relation.insert(tuple);
        }
        std::size_t i = free_pos.size();
        while (i > 0 && colors[free_pos[i - 1]] == p.lambda) colors[free_pos[--i]] = 1;
        if (i == 0) break;
        ++colors[free_pos[i - 1]];
    }
    return relation;
}

}  // namespace

TEST_CASE("allocator hands out pools and fresh vertices") {
    AuxAllocator alloc(3, 8, 101);
    CHECK(alloc.t_id(1) == 101);
    CHECK(alloc.f_id(1) == 109);
    CHECK(alloc.d_id(1, 1) == 117);
    CHECK(alloc.vadd_base() == 125);
    auto v1 = alloc.fresh_vadd(3);
    auto v2 = alloc.fresh_vadd(2);
    CHECK(v1 == std::vector<int>{125, 126, 127});
    CHECK(v2 == std::vector<int>{128, 129});
    CHECK(alloc.take_t(2) == std::vector<int>{101, 102});
    CHECK(alloc.take_t(2) == std::vector<int>{103, 104});
    CHECK_THROWS_AS(alloc.take_t(5), CapacityError);
    // D cursor wraps round-robin
    auto d1 = alloc.take_d(1, 6);
    auto d2 = alloc.take_d(1, 6);
    CHECK(d1[0] == 117);
    CHECK(d2[0] == 123);  // positions 6,7 then wrap to 0
    CHECK(d2[2] == 117);
    CHECK(alloc.family_color(101) == kTrue);
    CHECK(alloc.family_color(109) == kFalse);
    CHECK(alloc.family_color(117) == dummy_color(1));
    CHECK(alloc.family_color(125) == 0);
}

TEST_CASE("equality gadget structure (k=3)") {
    AuxAllocator alloc(3, 16, 201);
    auto g = equality_gadget(5, 9, alloc, 3);
    CHECK(g.hyperedges.size() == 30);  // C(7,3) - 5
    CHECK(g.aux.size() == 5);
    // no hyperedge contains both anchors
    for (const auto& e : g.hyperedges) {
        bool has_u = std::find(e.begin(), e.end(), 5) != e.end();
        bool has_v = std::find(e.begin(), e.end(), 9) != e.end();
        CHECK(!(has_u && has_v));
    }
    // each anchor appears in exactly 10 hyperedges
    for (int anchor : {5, 9}) {
        int deg = 0;
        for (const auto& e : g.hyperedges)
            if (std::find(e.begin(), e.end(), anchor) != e.end()) ++deg;
        CHECK(deg == 10);
    }
}

TEST_CASE("gadget anchor relations match the raw enumeration oracle (k=3)") {
    AuxAllocator alloc(3, 64, 301);
    SUBCASE("equality forces equal colors, every color achievable") {
        auto g = equality_gadget(1, 2, alloc, 3);
        auto p = forcing_problem(g, alloc);
        auto raw = raw_anchor_relation(p);
        CHECK(raw == equal_pair_relation(3));
        CHECK(anchor_relation(p) == raw);
    }
    SUBCASE("inequality forces distinct colors, every ordered pair achievable") {
        auto g = inequality_gadget(1, 2, alloc, 3);
        auto p = forcing_problem(g, alloc);
        auto raw = raw_anchor_relation(p);
        CHECK(raw == unequal_pair_relation(3));
        CHECK(anchor_relation(p) == raw);
    }
    SUBCASE("not-dummy pins the anchor to True or False") {
        auto g = not_dummy_gadget(1, alloc, 3);
        CHECK(g.hyperedges.size() == 1);
        auto p = forcing_problem(g, alloc);
        std::set<std::vector<int>> expected = {{kTrue}, {kFalse}};
        CHECK(raw_anchor_relation(p) == expected);
        CHECK(anchor_relation(p) == expected);
    }
    SUBCASE("equality checked against the inequality relation fails") {
        auto g = equality_gadget(1, 2, alloc, 3);
        CHECK(!verify_forcing(forcing_problem(g, alloc), unequal_pair_relation(3)));
    }
}

TEST_CASE("clause gadget blocks exactly the all-False assignment (k=3)") {
    AuxAllocator alloc(3, 64, 401);
    auto g = clause_gadget({1, 2, 3, 4, 5, 6}, alloc, 3);
    CHECK(g.hyperedges.size() == 7);
    CHECK(g.aux.size() == 3);
    auto p = forcing_problem(g, alloc);
    auto raw = raw_anchor_relation(p);
    // every tuple except all-six-False and (k=3 only) all-six-Dummy: bare
    // copy edges make monochromatic Dummy pairs force every a to False.
    CHECK(raw.size() == 3 * 3 * 3 * 3 * 3 * 3 - 2);
    CHECK(!raw.count({kFalse, kFalse, kFalse, kFalse, kFalse, kFalse}));
    int dd = dummy_color(1);
    CHECK(!raw.count({dd, dd, dd, dd, dd, dd}));
    CHECK(anchor_relation(p) == raw);
}

TEST_CASE("short clause gadgets block exactly their all-False assignments") {
    AuxAllocator alloc(3, 64, 451);
    SUBCASE("width 2") {
        auto g = clause_gadget({1, 2, 3, 4}, alloc, 3);
        CHECK(g.hyperedges.size() == 5);  // 2 copy edges, 2 T edges, final
        auto p = forcing_problem(g, alloc);
        auto raw = raw_anchor_relation(p);
        CHECK(raw.size() == 3 * 3 * 3 * 3 - 1);
        CHECK(!raw.count({kFalse, kFalse, kFalse, kFalse}));
        CHECK(anchor_relation(p) == raw);
    }
    SUBCASE("width 1") {
        auto g = clause_gadget({1, 2}, alloc, 3);
        CHECK(g.hyperedges.size() == 3);
        auto p = forcing_problem(g, alloc);
        auto raw = raw_anchor_relation(p);
        CHECK(raw.size() == 3 * 3 - 1);
        CHECK(!raw.count({kFalse, kFalse}));
        CHECK(anchor_relation(p) == raw);
    }
}

TEST_CASE("extension rules produce violation-free colorings") {
    AuxAllocator alloc(3, 64, 501);
    auto count_mono = [](const GadgetInstance& g, const std::vector<int>& colors) {
        int mono = 0;
        for (const auto& e : g.hyperedges) {
            int first = colors[static_cast<std::size_t>(e[0])];
            bool same = true;
            for (int v : e)
                if (colors[static_cast<std::size_t>(v)] != first) same = false;
            if (same) ++mono;
        }
        return mono;
    };
    SUBCASE("equality, every color") {
        for (int c = 1; c <= 3; ++c) {
            auto g = equality_gadget(1, 2, alloc, 3);
            std::vector<int> colors(1000, 0);
            colors[1] = colors[2] = c;
            extend_coloring(g, 3, colors);
            CHECK(count_mono(g, colors) == 0);
        }
    }
    SUBCASE("inequality, every ordered unequal pair") {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                if (a == b) continue;
                auto g = inequality_gadget(1, 2, alloc, 3);
                std::vector<int> colors(2000, 0);
                colors[1] = a;
                colors[2] = b;
                extend_coloring(g, 3, colors);
                CHECK(count_mono(g, colors) == 0);
            }
    }
    SUBCASE("clause, every satisfying copy assignment") {
        for (int mask = 1; mask < 8; ++mask) {  // at least one literal true
            auto g = clause_gadget({1, 2, 3, 4, 5, 6}, alloc, 3);
            std::vector<int> colors(3000, 0);
            for (int l = 0; l < 3; ++l) {
                int c = (mask >> l) & 1 ? kTrue : kFalse;
                colors[static_cast<std::size_t>(g.anchors[static_cast<std::size_t>(2 * l)])] = c;
                colors[static_cast<std::size_t>(g.anchors[static_cast<std::size_t>(2 * l + 1)])] =
                    c;
            }
            for (int pv : g.pool_used) colors[static_cast<std::size_t>(pv)] = kTrue;
            extend_coloring(g, 3, colors);
            CHECK(count_mono(g, colors) == 0);
        }
    }
}

TEST_CASE("fresh auxiliaries are never shared between gadget instances") {
    AuxAllocator alloc(3, 64, 601);
    auto g1 = equality_gadget(1, 2, alloc, 3);
    auto g2 = equality_gadget(3, 4, alloc, 3);
    auto g3 = inequality_gadget(5, 6, alloc, 3);
    std::set<int> seen;
    for (const auto* g : {&g1, &g2, &g3})
        for (int a : g->aux) CHECK(seen.insert(a).second);
}

TEST_CASE("k=4 gadget counts") {
    AuxAllocator alloc(4, 128, 701);
    auto eq = equality_gadget(1, 2, alloc, 4);
    CHECK(eq.aux.size() == 11);  // k^2 - k - 1
    CHECK(eq.hyperedges.size() == 660);  // C(13,4) - C(11,2)
    auto nd = not_dummy_gadget(3, alloc, 4);
    CHECK(nd.hyperedges.size() == 2);  // one per dummy class
    for (const auto& e : nd.hyperedges) CHECK(e.size() == 4);
}

TEST_CASE("extension_exists matches direct checks") {
    AuxAllocator alloc(3, 64, 801);
    auto g = equality_gadget(1, 2, alloc, 3);
    CHECK(extension_exists(g.hyperedges, {{1, 2}, {2, 2}}, 3));
    CHECK(!extension_exists(g.hyperedges, {{1, 1}, {2, 2}}, 3));
}
