#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quartic/families.hpp"
#include "quartic/mg1.hpp"
#include "test_helpers.hpp"

using namespace quartic;
using namespace quartic_test;

TEST_CASE("round trip preserves the graph and is byte-stable") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(9));
        Multigraph g = random_multigraph(n, rng);
        std::string text = write_mg1(g);
        Multigraph back = read_mg1(text);
        CHECK(back == g);
        CHECK(write_mg1(back) == text);
    }
}

TEST_CASE("known fixture text") {
    CHECK(write_mg1(squared_cycle(3)) == "mg 3 3\n0 1 2\n0 2 2\n1 2 2\n");
    CHECK(read_mg1("mg 3 3\n0 1 2\n0 2 2\n1 2 2\n") == squared_cycle(3));
    CHECK(read_mg1("mg 2 0\n") == Multigraph(2));
}

TEST_CASE("malformed inputs are rejected") {
    const char* bad[] = {
        "",                                  // empty
        "mg 3\n",                            // short header
        "graph 3 0\n",                       // wrong magic
        "mg 03 0\n",                         // leading zero
        "mg 3 1\n",                          // truncated edges
        "mg 3 1\n1 0 1\n",                   // u >= v
        "mg 3 1\n0 0 1\n",                   // loop
        "mg 3 1\n0 3 1\n",                   // vertex out of range
        "mg 3 1\n0 1 0\n",                   // zero multiplicity
        "mg 3 1\n0 1 5\n",                   // multiplicity above 4
        "mg 3 2\n0 2 1\n0 1 1\n",            // pairs out of order
        "mg 3 2\n0 1 1\n0 1 1\n",            // duplicate pair
        "mg 3 1\n0 1 1\nextra\n",            // trailing content
        "mg 3 1\n0  1 1\n",                  // double space
        "mg 3 1\n0 1 1 \n",                  // trailing space
        "mg 3 1\n0 +1 1\n",                  // signed number
        "mg x 0\n",                          // non-numeric
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(read_mg1(std::string(text)), Mg1Error);
    }
}
