#include <doctest.h>

#include <algorithm>

#include "errors.hpp"
#include "instantiate.hpp"
#include "oracle.hpp"
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

bool contains(const std::vector<AssumptionSet>& v, const AssumptionSet& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("running example extensions") {
    const Framework fw = ex1();
    CHECK(oracle::aba_extensions(fw, Semantics::Stb) == sets(fw, {{kA, kC}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Com) == sets(fw, {{kA, kC}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Grd) == sets(fw, {{kA, kC}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Prf) == sets(fw, {{kA, kC}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Adm) == sets(fw, {{}, {kA}, {kC}, {kA, kC}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Adm, true) == oracle::aba_extensions(fw, Semantics::Adm));
    CHECK(oracle::aba_extensions(fw, Semantics::Prf, true) == sets(fw, {{kA, kC}}));
}

TEST_CASE("running example credulous answers") {
    const Framework fw = ex1();
    CHECK(oracle::aba_credulous(fw, Semantics::Com, kP));
    CHECK_FALSE(oracle::aba_credulous(fw, Semantics::Com, kQ));
    CHECK_FALSE(oracle::aba_credulous(fw, Semantics::Stb, kB));
    auto w = oracle::aba_credulous_witness(fw, Semantics::Com, kP);
    REQUIRE(w);
    CHECK(*w == asms(fw, {kA, kC}));
    CHECK_THROWS_AS(oracle::aba_credulous(fw, Semantics::Com, 100), UsageError);
}

TEST_CASE("grounded is the empty set when no complete extension exists") {
    // a's contrary is derived from nothing: {} is not closed-admissible ... but
    // here a is its own contrary's only source, so {a} attacks itself.
    const Framework fw(2, {{1, {0}}, {0, {}}}, {0}, {{0, 1}});
    CHECK(oracle::aba_extensions(fw, Semantics::Com).empty());
    CHECK(oracle::aba_extensions(fw, Semantics::Grd) == sets(fw, {{}}));
    CHECK(oracle::aba_extensions(fw, Semantics::Stb).empty());
}

TEST_CASE("size guards") {
    std::vector<Atom> many(21);
    for (Atom i = 0; i < 21; ++i) many[i] = i;
    const Framework big(21, {}, many, {});
    CHECK_THROWS_AS(oracle::aba_extensions(big, Semantics::Adm), ResourceLimit);
}

TEST_CASE("BAF oracle on the running example core") {
    const Framework fw = ex1();
    const CoreBaf core = build_core(fw);
    // arguments: 0 ({a},a) 1 ({b},b) 2 ({a,b},c) 3 ({c},c) 4 ({a},p)
    ArgSet expected(core.size());
    for (ArgId x : {0u, 3u, 4u}) expected.set(x);
    CHECK(oracle::baf_extensions(core, Semantics::Stb) == std::vector<ArgSet>{expected});
    CHECK(oracle::baf_extensions(core, Semantics::Grd) == std::vector<ArgSet>{expected});
    CHECK(oracle::baf_extensions(core, Semantics::Com) == std::vector<ArgSet>{expected});
}

TEST_CASE("BAF oracle on the empty BAF") {
    const CoreBaf empty(1, {}, {}, {}, {});
    for (Semantics sem : kAllSemantics) CHECK(oracle::baf_extensions(empty, sem) == std::vector<ArgSet>{ArgSet(0)});
}

TEST_CASE("definitional invariants of the oracle on random frameworks") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        const auto adm = oracle::aba_extensions(fw, Semantics::Adm);
        const auto com = oracle::aba_extensions(fw, Semantics::Com);
        const auto prf = oracle::aba_extensions(fw, Semantics::Prf);
        const auto stb = oracle::aba_extensions(fw, Semantics::Stb);
        const auto grd = oracle::aba_extensions(fw, Semantics::Grd);

        for (const auto* family : {&adm, &com, &prf, &stb})
            for (const auto& e : *family) {
                CHECK(fw.is_closed(e));
                CHECK_FALSE(fw.attacks(e, e));
            }
        for (const auto& e : com) CHECK(contains(adm, e));
        for (const auto& e : prf) {
            CHECK(contains(com, e));
            for (const auto& f : com) CHECK((f == e || !e.is_subset_of(f)));
        }
        for (const auto& e : stb) CHECK(contains(adm, e));

        REQUIRE(grd.size() == 1);
        AssumptionSet meet = fw.all_assumptions();
        for (const auto& e : com) meet &= e;
        CHECK(grd[0] == (com.empty() ? fw.empty_assumptions() : meet));
    }
}

TEST_CASE("core extensions project onto framework extensions") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        const CoreBaf core = build_core(fw);
        if (core.size() > oracle::kMaxArguments) continue;
        for (Semantics sem : kAllSemantics) {
            const auto aba = oracle::aba_extensions(fw, sem);
            const auto baf = oracle::baf_extensions(core, sem);
            std::vector<AssumptionSet> projected;
            for (const auto& e : baf) projected.push_back(core.assumptions_of(e));
            std::sort(projected.begin(), projected.end());
            projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
            CHECK(projected == aba);
            // each framework extension lifts to a BAF extension; the grounded
            // fallback for an empty com is the empty set on both sides instead
            if (sem == Semantics::Grd && oracle::aba_extensions(fw, Semantics::Com).empty()) continue;
            for (const auto& s : aba) {
                const ArgSet lifted = core.lift(s);
                CHECK(std::find(baf.begin(), baf.end(), lifted) != baf.end());
            }
        }
    }
}
