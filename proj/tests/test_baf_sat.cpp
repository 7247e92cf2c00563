#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "baf_sat.hpp"
#include "errors.hpp"
#include "instantiate.hpp"
#include "oracle.hpp"
#include "sat_solver.hpp"
#include "support/examples.hpp"
#include "support/random_framework.hpp"

using namespace abaf;
using namespace abaf::testing;

namespace {

ArgSet args(std::size_t n, std::initializer_list<ArgId> ids) {
    ArgSet s(n);
    for (ArgId x : ids) s.set(x);
    return s;
}

}  // namespace

// Running example core ids: 0 ({a},a) 1 ({b},b) 2 ({a,b},c) 3 ({c},c) 4 ({a},p)

TEST_CASE("stable encoding of the running example") {
    const CoreBaf core = build_core(ex1());
    CHECK(enumerate_extensions(core, Semantics::Stb) == std::vector<ArgSet>{args(5, {0, 3, 4})});
}

TEST_CASE("complete encoding of the running example has one model") {
    const CoreBaf core = build_core(ex1());
    CHECK(enumerate_extensions(core, Semantics::Com) == std::vector<ArgSet>{args(5, {0, 3, 4})});
}

TEST_CASE("attack- and support-free core: complete forces everything in") {
    const Framework fw(3, {}, {0, 1, 2}, {});
    const CoreBaf core = build_core(fw);
    REQUIRE(core.attacks().empty());
    REQUIRE(core.supports().empty());
    const BafEncoding enc = encode_semantics(core, Semantics::Com);
    for (ArgId x = 0; x < core.size(); ++x) {
        const std::vector<int> unit{enc.vars.x[x]};
        CHECK(std::find(enc.cnf.clauses.begin(), enc.cnf.clauses.end(), unit) != enc.cnf.clauses.end());
    }
    CHECK(enumerate_extensions(core, Semantics::Com) == std::vector<ArgSet>{args(3, {0, 1, 2})});
    CHECK(grounded_assumptions(core) == fw.all_assumptions());
}

TEST_CASE("credulous clauses") {
    const CoreBaf core = build_core(ex1(), {kQ});
    const BafEncoding enc = encode_semantics(core, Semantics::Com);
    const auto p_args = core.concluding(kP);
    REQUIRE(p_args.size() == 1);
    CHECK(encode_credulous_clause(core, enc.vars, kP) == std::vector<int>{enc.vars.x[p_args[0]]});
    CHECK(encode_credulous_clause(core, enc.vars, kC).size() == 2);

    const CoreBaf plain = build_core(ex1());
    CHECK_THROWS_AS(encode_credulous_clause(plain, enc.vars, kQ), UsageError);

    // contrary of c is a sentinel nobody concludes: empty clause, immediate NO
    const Framework fw = ex1();
    const Atom sentinel = fw.contrary(kC);
    CHECK(encode_credulous_clause(plain, enc.vars, sentinel).empty());
    CHECK_FALSE(solve_credulous(plain, Semantics::Com, sentinel).accepted);
}

TEST_CASE("credulous acceptance on the running example") {
    const Framework fw = ex1();
    const CoreBaf core = build_core(fw, {kQ});
    auto com_p = solve_credulous(core, Semantics::Com, kP);
    CHECK(com_p.accepted);
    REQUIRE(com_p.witness);
    CHECK(*com_p.witness == asms(fw, {kA, kC}));
    CHECK_FALSE(solve_credulous(core, Semantics::Stb, kB).accepted);
    auto prf_c = solve_credulous(core, Semantics::Prf, kC);
    CHECK(prf_c.accepted);
    REQUIRE(prf_c.witness);
    CHECK(*prf_c.witness == asms(fw, {kA, kC}));
    CHECK_FALSE(solve_credulous(core, Semantics::Com, kQ).accepted);
    CHECK(solve_credulous(core, Semantics::Adm, kP).accepted);
    CHECK_THROWS_AS(solve_credulous(core, Semantics::Grd, kP), UsageError);
}

TEST_CASE("grounded assumptions") {
    CHECK(grounded_assumptions(build_core(ex1())) == asms(ex1(), {kA, kC}));
    // no complete extension: {a} derives its own contrary and a is a fact
    const Framework fw(2, {{1, {0}}, {0, {}}}, {0}, {{0, 1}});
    CHECK(enumerate_extensions(build_core(fw), Semantics::Com).empty());
    CHECK(grounded_assumptions(build_core(fw)).empty());
}

TEST_CASE("grounded model cap") {
    // mutual attack between 0 and 1 beside the unattacked 4: the first model
    // leaves a non-empty intersection to shrink
    const Framework fw(5, {{2, {0}}, {3, {1}}}, {0, 1, 4}, {{0, 3}, {1, 2}});
    const CoreBaf core = build_core(fw);
    CHECK(grounded_assumptions(core) == asms(fw, {4}));
    CHECK_THROWS_AS(grounded_assumptions(core, 1), ResourceLimit);
}

TEST_CASE("encodings match the BAF oracle on random cores") {
    std::size_t compared = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Framework fw = random_framework(seed);
        const CoreBaf core = build_core(fw);
        if (core.size() > oracle::kMaxArguments) continue;
        ++compared;
        for (Semantics sem : kAllSemantics) CHECK(enumerate_extensions(core, sem) == oracle::baf_extensions(core, sem));
    }
    CHECK(compared > 300);
}

TEST_CASE("auxiliary defense variables mean: the extension attacks cl(a)") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const CoreBaf core = build_core(random_framework(seed));
        for (Semantics sem : {Semantics::Adm, Semantics::Com}) {
            const BafEncoding enc = encode_semantics(core, sem);
            sat::Solver solver;
            enc.cnf.load_into(solver);
            int models = 0;
            while (models < 20 && solver.solve() == sat::Result::Sat) {
                ++models;
                ArgSet e = core.empty_set();
                for (ArgId x = 0; x < core.size(); ++x)
                    if (solver.value(enc.vars.x[x])) e.set(x);
                for (ArgId a = 0; a < core.size(); ++a) {
                    if (enc.vars.z[a] == 0) continue;
                    bool attacks_closure = false;
                    core.closure(a).for_each([&](std::size_t c) {
                        for (ArgId d : core.attackers_of(static_cast<ArgId>(c))) attacks_closure = attacks_closure || e.test(d);
                    });
                    CHECK(solver.value(enc.vars.z[a]) == attacks_closure);
                }
                std::vector<int> block;
                for (ArgId x = 0; x < core.size(); ++x) block.push_back(e.test(x) ? -enc.vars.x[x] : enc.vars.x[x]);
                if (!solver.add_clause(block)) break;
            }
        }
    }
}

TEST_CASE("credulous answers match the oracle; prf and com agree") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        std::vector<Atom> all(fw.declared_atoms());
        for (Atom p = 0; p < all.size(); ++p) all[p] = p;
        const CoreBaf core = build_core(fw, all);
        for (Atom q : all) {
            for (Semantics sem : {Semantics::Adm, Semantics::Com, Semantics::Stb}) {
                const BafAnswer ans = solve_credulous(core, sem, q);
                CHECK(ans.accepted == oracle::aba_credulous(fw, sem, q));
                if (ans.accepted) {
                    REQUIRE(ans.witness);
                    const auto exts = oracle::aba_extensions(fw, sem);
                    CHECK(std::find(exts.begin(), exts.end(), *ans.witness) != exts.end());
                    CHECK(fw.deduce(*ans.witness).test(q));
                }
            }
            CHECK(solve_credulous(core, Semantics::Prf, q).accepted ==
                  solve_credulous(core, Semantics::Com, q).accepted);
        }
    }
}

TEST_CASE("dimacs output names every primary variable") {
    const CoreBaf core = build_core(ex1());
    CnfFormula cnf;
    solve_credulous(core, Semantics::Adm, kP, &cnf);
    std::ostringstream out;
    cnf.write_dimacs(out);
    const std::string text = out.str();
    CHECK(text.find("c x 1 arg 1 concl 1 supp 1\n") != std::string::npos);
    CHECK(text.find("c a ") != std::string::npos);
    CHECK(text.find("p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size())) !=
          std::string::npos);
}
