#include "paperlab/scenario.hpp"

#include <algorithm>

namespace paperlab {

namespace {

RingPtr block_ring(const PrimeField& field, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return Ring::make(field, VarSpec::uniform(std::move(names)));
}

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

ScenarioExpectations expectations(std::uint32_t p, std::size_t d) {
  ScenarioExpectations e;
  e.order_g = power(p, d);
  e.order_h = p;
  e.galois_factors.assign(d - 1, p);
  e.dimension = static_cast<int>(2 * d);
  e.depth = static_cast<int>(d + 2);
  e.cm_defect = static_cast<int>(d) - 2;
  return e;
}

PrimeField checked_field(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  return PrimeField(p);
}

}  // namespace

Scenario build_example_main(std::uint32_t p) {
  const PrimeField field = checked_field(p);
  // rows of the 6x6 matrix with a, b, c in positions (1,2), (3,4), (5,6)
  auto generator = [&](int a, int b, int c) {
    return MatrixFp::from_rows(field, {{1, a, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0},
                                       {0, 0, 1, b, 0, 0},
                                       {0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1, c},
                                       {0, 0, 0, 0, 0, 1}});
  };
  MatrixGroup g = MatrixGroup::closure(field, 6, {generator(1, 0, 0), generator(0, 1, 0), generator(0, 0, 1)});
  MatrixGroup h = MatrixGroup::closure(field, 6, {generator(1, 1, 1)});
  return Scenario{p, 3, block_ring(field, 3), std::move(g), std::move(h), expectations(p, 3)};
}

Scenario build_example_general(std::uint32_t p, std::size_t d) {
  const PrimeField field = checked_field(p);
  if (d < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "d must be at least 3: for d < 3 the diagonal generator fixes a subspace of "
                "codimension d <= 2, so it is a bireflection and H is generated by bireflections");
  }
  if (2 * d > kMaxVars) throw Error(ErrorCode::kInvalidArgument, "too many blocks for the variable limit");

  auto block_matrix = [&](const std::vector<bool>& active) {
    MatrixFp m = MatrixFp::identity(field, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      if (active[i]) m(2 * i, 2 * i + 1) = field.one();
    }
    return m;
  };
  std::vector<MatrixFp> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<bool> active(d, false);
    active[i] = true;
    gens.push_back(block_matrix(active));
  }
  MatrixGroup g = MatrixGroup::closure(field, 2 * d, std::move(gens));
  MatrixGroup h = MatrixGroup::closure(field, 2 * d, {block_matrix(std::vector<bool>(d, true))});
  return Scenario{p, d, block_ring(field, d), std::move(g), std::move(h), expectations(p, d)};
}

GeneratorSet build_R_generators(const Scenario& scenario) {
  const RingPtr& r = scenario.ring;
  const std::uint32_t p = scenario.p;
  GeneratorSet out;
  out.bound = p;
  for (std::size_t i = 0; i < scenario.d; ++i) {
    const Polynomial x = Polynomial::variable(r, 2 * i);
    const Polynomial y = Polynomial::variable(r, 2 * i + 1);
    out.entries.push_back({y, 1});
    out.entries.push_back({x.pow(p) - x * y.pow(p - 1), p});
  }
  return out;
}

std::uint32_t default_degree_bound(std::uint32_t p, std::size_t d) {
  return std::max<std::uint32_t>(p, static_cast<std::uint32_t>(d) * (p - 1));
}

}  // namespace paperlab
