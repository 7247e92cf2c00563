#include <doctest.h>

#include <set>
#include <algorithm>

#include "benchgen.hpp"
#include "errors.hpp"
#include "iccma_io.hpp"

using namespace abaf;

namespace {

std::string text(const Framework& fw) { return to_iccma(fw); }

std::size_t non_assumptions(const Framework& fw, const Rule& r) {
    std::size_t k = 0;
    for (Atom b : r.body) k += !fw.is_assumption(b);
    return k;
}

}  // namespace

TEST_CASE("rng is reproducible and bounded") {
    Rng a(5), b(5);
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.below(7);
        CHECK(x == b.below(7));
        CHECK(x < 7);
    }
    Rng c(1);
    for (int i = 0; i < 1000; ++i) {
        const auto x = c.between(3, 5);
        CHECK((x >= 3 && x <= 5));
    }
}

TEST_CASE("small set 1 instance") {
    GenParams1 p;
    p.n_atoms = 10;
    p.asm_ratio = 0.2;
    p.head_ratio = 0.5;
    p.seed = 7;
    const Framework fw = gen_set1(p);
    CHECK(fw.num_assumptions() == 2);
    CHECK(fw.declared_atoms() == 10);
    for (const Rule& r : fw.rules()) CHECK(r.body.size() == 1);
    CHECK(fw.classify().additive);
    std::set<Atom> asm_heads;
    for (const Rule& r : fw.rules())
        if (fw.is_assumption(r.head)) asm_heads.insert(r.head);
    CHECK(asm_heads.size() <= 1);
    REQUIRE(fw.default_query());
    CHECK_FALSE(fw.is_assumption(*fw.default_query()));
    CHECK(text(fw) == text(gen_set1(p)));
}

TEST_CASE("structural postconditions over the grids") {
    const auto g1 = grid_set1({20, 40}, 2, 1);
    const auto g2 = grid_set2({20, 40}, 2, 100001);
    CHECK(g1.size() == 2 * 2 * 2 * 3 * 3 * 2);
    CHECK(g2.size() == 2 * 2 * 2 * 2 * 2 * 3 * 2);
    for (const auto& p : g1) {
        const Framework fw = gen_set1(p);
        CHECK(fw.num_assumptions() == static_cast<std::size_t>(p.n_atoms * p.asm_ratio + 1e-9));
        std::vector<std::size_t> per_head(fw.num_atoms());
        for (const Rule& r : fw.rules()) {
            CHECK(!r.body.empty());
            CHECK(r.body.size() <= p.max_rule_size);
            CHECK(std::find(r.body.begin(), r.body.end(), r.head) == r.body.end());
            ++per_head[r.head];
        }
        for (std::size_t c : per_head) CHECK(c <= p.max_rules_per_atom);
        for (Atom a = 0; a < fw.declared_atoms(); ++a)
            if (!fw.is_assumption(a)) CHECK(per_head[a] >= 1);
        if (p.max_rule_size == 1) CHECK(fw.classify().additive);
    }
    for (const auto& p : g2) {
        const Framework fw = gen_set2(p);
        for (const Rule& r : fw.rules()) {
            CHECK(r.body.size() <= p.max_rule_size);
            CHECK(non_assumptions(fw, r) <= p.slack);
        }
        if (p.slack == 0) CHECK(fw.classify().atomic);
    }
}

TEST_CASE("full grids have the published sizes and distinct instances per cell") {
    const auto g1 = grid_set1({80, 120, 160, 200}, 5, 1);
    CHECK(g1.size() == 720);
    CHECK(grid_set2({80, 120, 160, 200}, 5, 1).size() == 960);
    std::set<std::string> names;
    for (const auto& p : g1) names.insert(instance_name(p));
    CHECK(names.size() == 720);

    const auto small = grid_set1({20}, 5, 42);
    for (std::size_t cell = 0; cell < small.size(); cell += 5) {
        std::set<std::string> texts;
        for (std::size_t i = 0; i < 5; ++i) texts.insert(text(gen_set1(small[cell + i])));
        CHECK(texts.size() == 5);
    }
}

TEST_CASE("names and manifest rows") {
    GenParams1 p;
    p.n_atoms = 10;
    p.head_ratio = 0.5;
    p.seed = 7;
    CHECK(instance_name(p) == "set1_n10_a0.2_h0.5_r1_s1_7.aba");
    GenParams2 q;
    q.n_atoms = 10;
    q.slack = 1;
    q.seed = 3;
    CHECK(instance_name(q) == "set2_n10_a0.2_h0.2_r2_s2_k1_3.aba");
    CHECK(manifest_header() == "file,set,n_atoms,asm_ratio,head_ratio,mr,ms,slack,seed");
    CHECK(manifest_row(manifest_entry(p)) == "set1_n10_a0.2_h0.5_r1_s1_7.aba,1,10,0.2,0.5,1,1,0,7");
}

TEST_CASE("parameter validation") {
    GenParams1 p;
    p.asm_ratio = 0;
    CHECK_THROWS_AS(gen_set1(p), UsageError);
    p.asm_ratio = 0.2;
    p.max_rule_size = 0;
    CHECK_THROWS_AS(gen_set1(p), UsageError);
    p.max_rule_size = 1;
    p.n_atoms = 3;  // floor(0.6) = 0 assumptions
    CHECK_THROWS_AS(gen_set1(p), UsageError);
    GenParams2 q;
    q.head_ratio = 1.5;
    CHECK_THROWS_AS(gen_set2(q), UsageError);
}
