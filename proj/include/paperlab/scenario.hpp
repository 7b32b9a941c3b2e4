#pragma once

// The block-unipotent scenario: T = F_p[x1,y1,...,xd,yd], G generated by the
// d single-block maps x_i -> x_i + y_i, and H the cyclic diagonal subgroup.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "paperlab/groups.hpp"
#include "paperlab/invariants.hpp"

namespace paperlab {

struct ScenarioExpectations {
  std::uint64_t order_g = 0;
  std::uint64_t order_h = 0;
  std::vector<std::uint64_t> galois_factors;
  int dimension = 0;  // of T^H, equal to dim T
  int depth = 0;      // of T^H
  int cm_defect = 0;
};

struct Scenario {
  std::uint32_t p;
  std::size_t d;
  RingPtr ring;
  MatrixGroup g;
  MatrixGroup h;
  ScenarioExpectations expected;
};

/// Three blocks, G given by the matrices with free entries a, b, c above the
/// diagonal of each 2x2 block.
Scenario build_example_main(std::uint32_t p);

/// d copies of the 2x2 unipotent block. Rejects d < 3, where the diagonal
/// subgroup would contain nonidentity bireflections.
Scenario build_example_general(std::uint32_t p, std::size_t d);

/// y_i and x_i^p - x_i*y_i^(p-1) for each block, in that order.
GeneratorSet build_R_generators(const Scenario& scenario);

/// max(p, d*(p-1))
std::uint32_t default_degree_bound(std::uint32_t p, std::size_t d);

}  // namespace paperlab
