#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spfd/factorize.hpp"
#include "spfd/graph.hpp"
#include "spfd/product.hpp"

namespace spfd {

inline constexpr int kOracleCap = 16;

// Exhaustive split search over pairs of vertex subsets through vertex 0. Shares
// nothing with factor_exact beyond graph primitives; used as ground truth.
LocalFactorization oracle_pfd(const Graph& g);

// All randomness goes through std::mt19937_64 with integers drawn as
// `next() % bound` and probabilities as `(next() >> 11) * 2^-53`, so a seed
// reproduces the same graphs on any conforming implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

Graph random_graph(int n, double edge_prob, Rng& rng);
Graph random_connected_graph(int n, double edge_prob, Rng& rng, int budget = 10000);
// Rejection-samples connected thin graphs. Throws Pipeline when the budget runs out.
Graph gen_thin_graph(int n, double edge_prob, std::uint64_t seed, int budget = 10000);
Graph gen_thin_graph(int n, double edge_prob, Rng& rng, int budget = 10000);

struct ProductInstance {
    Graph graph;
    std::vector<Graph> ground_truth_factors;
    Coordinatization ground_truth_coords;
    std::uint64_t seed = 0;
    bool thin = false;
};

ProductInstance gen_product_instance(const std::vector<int>& factor_sizes, std::uint64_t seed,
                                     double edge_prob = 0.5);
ProductInstance product_instance(const std::vector<Graph>& factors, std::uint64_t seed = 0);

// A prime graph whose backbone neighborhoods all split into two factors.
// Built by gluing path-product blocks with a twist; see oracle.cpp.
Graph gen_twisted_instance();

struct StagingInstance {
    ProductInstance instance;
    // Ground-truth Cartesian edges that fail the S1-condition in every 1-neighborhood.
    std::vector<Edge> non_s1_cartesian;
};

// Thin products with a Cartesian fiber that no 1-neighborhood identifies.
StagingInstance gen_staging_instance();

// Named small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace spfd
