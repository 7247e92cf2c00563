#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "instantiate.hpp"
#include "support/examples.hpp"
#include "support/random_framework.hpp"

using namespace abaf;
using namespace abaf::testing;

namespace {

std::vector<AssumptionSet> sets(const Framework& fw, std::initializer_list<std::initializer_list<Atom>> list) {
    std::vector<AssumptionSet> out;
    for (auto s : list) out.push_back(asms(fw, s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AssumptionSet> brute_force_supports(const Framework& fw, Atom target) {
    std::vector<AssumptionSet> all;
    const std::size_t n = fw.num_assumptions();
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        AssumptionSet s = fw.empty_assumptions();
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) s.set(fw.assumptions()[i]);
        if (fw.restricted_deduce(s).test(target)) all.push_back(s);
    }
    std::vector<AssumptionSet> minimal;
    for (const auto& s : all)
        if (std::none_of(all.begin(), all.end(), [&](const auto& t) { return !(t == s) && t.is_subset_of(s); }))
            minimal.push_back(s);
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

bool has_arg(const CoreBaf& core, Atom concl, const AssumptionSet& support) {
    return std::any_of(core.args().begin(), core.args().end(),
                       [&](const CoreArgument& x) { return x.conclusion == concl && x.support == support; });
}

}  // namespace

TEST_CASE("minimal supports on the running example") {
    const Framework fw = ex1();
    for (auto search : {SupportSearch::Sat, SupportSearch::Backtracking}) {
        CHECK(minimal_supports(fw, kC, search) == sets(fw, {{kC}, {kA, kB}}));
        CHECK(minimal_supports(fw, kP, search) == sets(fw, {{kA}}));
        CHECK(minimal_supports(fw, kQ, search) == sets(fw, {{kB}}));
        CHECK(minimal_supports(fw, 5, search).empty());
    }
}

TEST_CASE("assumption-redundant derivations are not supports") {
    // running example plus a <- b
    const Framework fw(6, {{kP, {kA}}, {kQ, {kB}}, {kC, {kP, kQ}}, {kA, {kB}}}, {kA, kB, kC}, {{kB, kP}});
    CHECK(minimal_supports(fw, kP) == sets(fw, {{kA}}));
    CHECK(minimal_supports(fw, kP, SupportSearch::Backtracking) == sets(fw, {{kA}}));
    CHECK(minimal_supports(fw, kA) == sets(fw, {{kA}, {kB}}));
}

TEST_CASE("minimal supports match brute force and both searches agree") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        for (Atom p = 0; p < fw.num_atoms(); ++p) {
            const auto want = brute_force_supports(fw, p);
            CHECK(minimal_supports(fw, p, SupportSearch::Sat) == want);
            CHECK(minimal_supports(fw, p, SupportSearch::Backtracking) == want);
        }
    }
}

TEST_CASE("core of the running example") {
    const Framework fw = ex1();
    const CoreBaf core = build_core(fw);
    REQUIRE(core.size() == 5);
    CHECK(has_arg(core, kA, asms(fw, {kA})));
    CHECK(has_arg(core, kB, asms(fw, {kB})));
    CHECK(has_arg(core, kC, asms(fw, {kC})));
    CHECK(has_arg(core, kC, asms(fw, {kA, kB})));
    CHECK(has_arg(core, kP, asms(fw, {kA})));
    CHECK_FALSE(has_arg(core, kQ, asms(fw, {kB})));  // expendable

    // sorted by (conclusion, support bits)
    using E = CoreBaf::Edge;
    CHECK(core.attacks() == std::vector<E>{{4, 1}, {4, 2}});
    CHECK(core.supports() == std::vector<E>{{2, 0}, {2, 1}, {2, 3}, {4, 0}});
    CHECK(core.arg(2).support_closure == asms(fw, {kA, kB, kC}));
}

TEST_CASE("query atoms keep otherwise expendable conclusions") {
    const Framework fw = ex1();
    const CoreBaf core = build_core(fw, {kQ});
    CHECK(core.size() == 6);
    CHECK(has_arg(core, kQ, asms(fw, {kB})));
    CHECK(core.is_target(kQ));
    CHECK_FALSE(build_core(fw).is_target(kQ));
    CHECK_THROWS_AS(build_core(fw, {99}), UsageError);
}

TEST_CASE("fragment size bounds on the worked fragment examples") {
    const Framework atomic(5, {{3, {0}}, {4, {1}}, {0, {2}}}, {0, 1, 2}, {});
    CHECK(build_core(atomic).size() <= atomic.rules().size() + atomic.num_assumptions());
    const Framework additive(7, {{3, {0}}, {4, {1}}, {5, {3}}, {6, {4}}}, {0, 1, 2}, {});
    CHECK(build_core(additive).size() <= (additive.num_assumptions() + 1) * additive.num_atoms());
}

TEST_CASE("every edge satisfies its defining predicate") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        const CoreBaf core = build_core(fw);
        std::vector<CoreBaf::Edge> att, sup;
        for (ArgId x = 0; x < core.size(); ++x)
            for (ArgId y = 0; y < core.size(); ++y) {
                const auto& ax = core.arg(x);
                const auto& ay = core.arg(y);
                bool attacks = false;
                ay.support.for_each([&](std::size_t b) { attacks = attacks || fw.contrary(static_cast<Atom>(b)) == ax.conclusion; });
                if (attacks) att.emplace_back(x, y);
                const bool asm_arg = fw.is_assumption(ay.conclusion) && ay.support == asms(fw, {ay.conclusion});
                if (asm_arg && x != y && fw.closure(ax.support).test(ay.conclusion)) sup.emplace_back(x, y);
            }
        CHECK(core.attacks() == att);
        CHECK(core.supports() == sup);

        for (const auto& x : core.args()) {
            CHECK(fw.deduce(x.support).test(x.conclusion));
            CHECK(x.support_closure == fw.closure(x.support));
        }
        for (Atom a : fw.assumptions()) CHECK(has_arg(core, a, asms(fw, {a})));
        CHECK(std::is_sorted(core.args().begin(), core.args().end(), [](const auto& x, const auto& y) {
            return x.conclusion != y.conclusion ? x.conclusion < y.conclusion : x.support < y.support;
        }));
    }
}

TEST_CASE("core construction is deterministic and backend independent") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Framework fw = random_framework(seed);
        const CoreBaf a = build_core(fw), b = build_core(fw), c = build_core(fw, {}, SupportSearch::Backtracking);
        CHECK(to_baf_text(a) == to_baf_text(b));
        CHECK(to_baf_text(a) == to_baf_text(c));
    }
}

TEST_CASE("full instantiation") {
    const Framework fw = ex1();
    const CoreBaf full = build_full_instantiation(fw, 1000);
    CHECK(has_arg(full, kQ, asms(fw, {kB})));
    CHECK(has_arg(full, kQ, asms(fw, {kA, kB})));
    CHECK(full.size() <= 8 * 6);
    CHECK_THROWS_AS(build_full_instantiation(fw, 3), ResourceLimit);

    const Framework single(1, {}, {0}, {});
    CHECK(build_full_instantiation(single, 10).size() == 1);
}

TEST_CASE("baf text format") {
    const std::string text = to_baf_text(build_core(ex1()));
    CHECK(text ==
          "baf 5\n"
          "arg 1 1 1\n"
          "arg 2 2 2\n"
          "arg 3 3 1 2\n"
          "arg 4 3 3\n"
          "arg 5 4 1\n"
          "att 5 2\n"
          "att 5 3\n"
          "sup 3 1\n"
          "sup 3 2\n"
          "sup 3 4\n"
          "sup 5 1\n");
}
