#include <doctest.h>

#include "errors.hpp"
#include "iccma_io.hpp"
#include "support/examples.hpp"
#include "support/random_framework.hpp"

using namespace abaf;
using namespace abaf::testing;

TEST_CASE("parse the running example") {
    const Framework fw = parse_iccma(kEx1Text);
    CHECK(fw == ex1());
    CHECK(fw.declared_atoms() == 6);
    CHECK(fw.num_assumptions() == 3);
    CHECK(fw.rules().size() == 3);
    CHECK(fw.contrary(kB) == kP);
    CHECK(fw.has_declared_contrary(kB));
    CHECK_FALSE(fw.has_declared_contrary(kA));
    CHECK(fw.rules()[2].head == kC);
    CHECK(fw.rules()[2].body == std::vector<Atom>{kP, kQ});
}

TEST_CASE("assumptions without a contrary get distinct underivable sentinels") {
    const Framework fw = parse_iccma("p aba 1\na 1\n");
    CHECK(fw.num_assumptions() == 1);
    CHECK(fw.rules().empty());
    const Atom s = fw.contrary(0);
    CHECK(s >= fw.declared_atoms());
    CHECK_FALSE(fw.is_rule_head(s));

    const Framework ex = ex1();
    CHECK(ex.contrary(kA) != ex.contrary(kC));
    CHECK(ex.num_atoms() == 8);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_iccma(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.line());
        }
        return -1L;
    };
    CHECK(line_of("p aba 2\nr 1 2\n") == 0);  // no assumptions
    CHECK(line_of("a 1\n") == 1);             // missing header
    CHECK(line_of("p aba 3\na 1\na 4\n") == 3);
    CHECK(line_of("p aba 3\na 1\nc 1 2\nc 1 3\n") == 4);
    CHECK(line_of("p aba 3\na 1\nr 2 7\n") == 3);
    CHECK(line_of("p aba 3\na 1\nx 2\n") == 3);
    CHECK(line_of("p aba 3\na 1\np aba 3\n") == 3);
    CHECK(line_of("p aba 3\na one\n") == 2);
    CHECK(line_of("p abx 3\n") == 1);
    CHECK_THROWS_AS(parse_iccma("p aba 2\na 1\nc 2 1\n"), ParseError);  // contrary for non-assumption
}

TEST_CASE("comments, blank lines and the query sidecar") {
    const Framework fw = parse_iccma("# leading comment\n\np aba 3\n# query 2\na 1\n\nc 1 3\nr 3 2\n");
    REQUIRE(fw.default_query());
    CHECK(*fw.default_query() == 1);
    CHECK(fw.contrary(0) == 2);
}

TEST_CASE("serialization round trip") {
    CHECK(parse_iccma(to_iccma(ex1())) == ex1());
    CHECK(to_iccma(ex1()) == "p aba 6\na 1\na 2\na 3\nc 2 4\nr 4 1\nr 5 2\nr 3 4 5\n");
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Framework fw = random_framework(seed);
        const std::string text = to_iccma(fw);
        const Framework back = parse_iccma(text);
        CHECK(back == fw);
        CHECK(to_iccma(back) == text);
    }
}

TEST_CASE("deduce on the running example") {
    const Framework fw = ex1();
    CHECK(fw.deduce(asms(fw, {kA, kB})) == atoms(fw, {kA, kB, kP, kQ, kC}));
    CHECK(fw.deduce(asms(fw, {})).empty());
    CHECK(fw.deduce(asms(fw, {kC})) == atoms(fw, {kC}));
}

TEST_CASE("empty-body rules fire from the empty set") {
    const Framework fw(3, {{1, {}}, {2, {1}}}, {0}, {{0, 2}});
    CHECK(fw.deduce(fw.empty_assumptions()) == atoms(fw, {1, 2}));
    CHECK(fw.attacks(fw.empty_assumptions(), asms(fw, {0})));
}

TEST_CASE("closure on the running example") {
    const Framework fw = ex1();
    CHECK(fw.closure(asms(fw, {kA, kB})) == asms(fw, {kA, kB, kC}));
    CHECK(fw.closure(asms(fw, {kA})) == asms(fw, {kA}));
    CHECK(fw.closure(asms(fw, {})).empty());
    CHECK(fw.is_closed(asms(fw, {kA, kC})));
    CHECK_FALSE(fw.is_closed(asms(fw, {kA, kB})));
}

TEST_CASE("attacks on the running example") {
    const Framework fw = ex1();
    CHECK(fw.attacks(asms(fw, {kA}), asms(fw, {kB})));
    CHECK_FALSE(fw.attacks(asms(fw, {kB}), asms(fw, {kA})));
    CHECK_FALSE(fw.attacks(asms(fw, {}), asms(fw, {kA, kB, kC})));
}

TEST_CASE("restricted chaining does not propagate foreign assumptions") {
    // a <- b, p <- a
    const Framework fw(3, {{0, {1}}, {2, {0}}}, {0, 1}, {});
    CHECK(fw.deduce(asms(fw, {1})) == atoms(fw, {0, 1, 2}));
    CHECK(fw.restricted_deduce(asms(fw, {1})) == atoms(fw, {0, 1}));
    CHECK(fw.restricted_deduce(asms(fw, {0, 1})) == atoms(fw, {0, 1, 2}));
}

TEST_CASE("fragment classification") {
    CHECK(ex1().classify() == FragmentInfo{false, false, false});
    // p<-a, q<-b, a<-c
    const Framework atomic(5, {{3, {0}}, {4, {1}}, {0, {2}}}, {0, 1, 2}, {});
    CHECK(atomic.classify().atomic);
    CHECK_FALSE(atomic.classify().flat);
    // p<-a, q<-b, r<-p, s<-q
    const Framework additive(7, {{3, {0}}, {4, {1}}, {5, {3}}, {6, {4}}}, {0, 1, 2}, {});
    CHECK(additive.classify() == FragmentInfo{true, false, true});
    const Framework no_rules(2, {}, {0}, {});
    CHECK(no_rules.classify() == FragmentInfo{true, true, true});
}

TEST_CASE("framework validation") {
    CHECK_THROWS_AS(Framework(2, {}, {}, {}), UsageError);
    CHECK_THROWS_AS(Framework(2, {}, {2}, {}), UsageError);
    CHECK_THROWS_AS(Framework(2, {{0, {5}}}, {0}, {}), UsageError);
    CHECK_THROWS_AS(Framework(2, {}, {0}, {{0, 1}, {0, 1}}), UsageError);
    CHECK_THROWS_AS(Framework(2, {}, {0}, {{1, 0}}), UsageError);
}

TEST_CASE("deduction properties on random frameworks") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Framework fw = random_framework(seed);
        Rng rng(seed);
        for (int k = 0; k < 10; ++k) {
            const AssumptionSet s = random_subset(fw, rng);
            const AssumptionSet t = s | random_subset(fw, rng);
            const AtomSet th_s = fw.deduce(s);
            // extensive and monotone
            CHECK(s.as<AtomTag>().is_subset_of(th_s));
            CHECK(th_s.is_subset_of(fw.deduce(t)));
            // closure idempotent
            const AssumptionSet cl = fw.closure(s);
            CHECK(fw.closure(cl) == cl);
            // restricted chaining is weaker and agrees on closed sets
            CHECK(fw.restricted_deduce(s).is_subset_of(th_s));
            if (fw.is_closed(s)) CHECK(fw.restricted_deduce(s) == th_s);
            // flat frameworks: every set is closed
            if (fw.classify().flat) CHECK(cl == s);
            // additive frameworks: theory is the union of singleton theories
            if (fw.classify().additive) {
                AtomSet uni = fw.deduce(fw.empty_assumptions());
                s.for_each([&](std::size_t a) { uni |= fw.deduce(asms(fw, {static_cast<Atom>(a)})); });
                CHECK(uni == th_s);
            }
        }
    }
}

TEST_CASE("deduce agrees with a naive fixpoint") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Framework fw = random_framework(seed);
        Rng rng(seed * 7 + 1);
        const AssumptionSet s = random_subset(fw, rng);
        AtomSet naive = s.as<AtomTag>();
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : fw.rules()) {
                bool fires = std::all_of(r.body.begin(), r.body.end(), [&](Atom b) { return naive.test(b); });
                if (fires && !naive.test(r.head)) {
                    naive.set(r.head);
                    changed = true;
                }
            }
        }
        CHECK(naive == fw.deduce(s));
    }
}
