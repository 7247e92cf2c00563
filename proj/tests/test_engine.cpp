#include <doctest.h>

#include "engine.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "support/examples.hpp"
#include "support/random_framework.hpp"

using namespace abaf;
using namespace abaf::testing;

TEST_CASE("engine names and defaults") {
    for (Engine e : {Engine::Baf, Engine::Direct, Engine::Oracle}) CHECK(parse_engine(to_string(e)) == e);
    CHECK_FALSE(parse_engine("asp"));
    CHECK(default_engine(Semantics::Stb) == Engine::Direct);
    for (Semantics s : {Semantics::Adm, Semantics::Com, Semantics::Prf, Semantics::Grd})
        CHECK(default_engine(s) == Engine::Baf);
}

TEST_CASE("solve_query on the running example") {
    const Framework fw = ex1();
    auto stb = solve_query(fw, Semantics::Stb, kP);
    CHECK(stb.engine == Engine::Direct);
    CHECK(stb.accepted);
    REQUIRE(stb.witness);
    CHECK(*stb.witness == asms(fw, {kA, kC}));
    CHECK(stb.n_args == 0);

    auto com = solve_query(fw, Semantics::Com, kQ);
    CHECK(com.engine == Engine::Baf);
    CHECK_FALSE(com.accepted);
    CHECK(com.n_args == 6);  // q is kept as a target

    auto grd = solve_query(fw, Semantics::Grd, kC);
    CHECK(grd.accepted);
    REQUIRE(grd.witness);
    CHECK(*grd.witness == asms(fw, {kA, kC}));

    CHECK_THROWS_AS(solve_query(fw, Semantics::Grd, kC, {Engine::Direct}), UsageError);
    CHECK_THROWS_AS(solve_query(fw, Semantics::Com, 6), UsageError);
    CHECK_THROWS_AS(solve_query(fw, Semantics::Com, 100), UsageError);
}

TEST_CASE("all engines agree") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Framework fw = random_framework(seed);
        for (Atom q = 0; q < fw.declared_atoms(); ++q)
            for (Semantics sem : kAllSemantics) {
                const bool want = solve_query(fw, sem, q, {Engine::Oracle}).accepted;
                CHECK(solve_query(fw, sem, q, {Engine::Baf}).accepted == want);
                if (sem != Semantics::Grd) CHECK(solve_query(fw, sem, q, {Engine::Direct}).accepted == want);
            }
    }
}
