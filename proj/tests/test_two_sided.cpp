#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "checks.hpp"
#include "localcross/generators.hpp"
#include "localcross/oracle.hpp"
#include "localcross/two_sided.hpp"

using namespace localcross;
using namespace lctest;

TEST(TwoSided, RandomAgreesWithOracle) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 1500; ++it) {
        int nx = 1 + static_cast<int>(draw_below(rng, 5));
        int ny = 1 + static_cast<int>(draw_below(rng, 5));
        double p = 0.3 + 0.1 * static_cast<double>(draw_below(rng, 5));
        auto inst = random_bipartite(nx, ny, p, rng);
        int k = static_cast<int>(draw_below(rng, 3));
        SolveStats st;
        auto got = solve_two_sided(inst, k, {}, &st);
        auto want = oracle_two_sided(inst, k);
        ASSERT_EQ(got.has_value(), want.has_value()) << "it=" << it << " k=" << k;
        if (got) EXPECT_TRUE(is_two_layer_k_planar(inst, *got, k));
    }
}
