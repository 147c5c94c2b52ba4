#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "superperm/atsp_instance.hpp"
#include "superperm/error.hpp"
#include "superperm/symmetrize.hpp"

using namespace superperm;

namespace {

AtspInstance random_instance(std::size_t n, Rng& rng) {
  AtspInstance inst;
  inst.name = "random";
  inst.weights = oracle::random_matrix(n, 1, 9, rng);
  return inst;
}

}  // namespace

TEST_CASE("symmetrize the two-symbol instance") {
  const AtspInstance inst = build_atsp(2);
  const SymInstance sym = symmetrize(inst, 100);
  REQUIRE(sym.dimension() == 4);
  CHECK(sym.offset == 200);
  CHECK(sym.forbidden == 1000);
  CHECK(sym.weights.at(sym.ghost(0), 1) == 101);
  CHECK(sym.weights.at(1, sym.ghost(0)) == 101);
  CHECK(sym.weights.at(sym.ghost(1), 0) == 100);
  CHECK(sym.weights.at(0, sym.ghost(0)) == 0);
  CHECK(sym.weights.at(0, 1) == sym.forbidden);
  CHECK(sym.weights.at(sym.ghost(0), sym.ghost(1)) == sym.forbidden);
  CHECK(symmetrize(build_atsp(3), 1000).dimension() == 12);
}

TEST_CASE("symmetrize checks big M") {
  const AtspInstance inst = build_atsp(3);
  CHECK(default_big_m(inst) == 6 * 3 + 1);
  CHECK_NOTHROW(symmetrize(inst, default_big_m(inst)));
  CHECK_THROWS_AS(symmetrize(inst, default_big_m(inst) - 1), InputError);
  CHECK_THROWS_AS(symmetrize(inst, 0), InputError);
}

TEST_CASE("symmetric matrix is symmetric") {
  Rng rng(11);
  const SymInstance sym = symmetrize(random_instance(6, rng), 1000);
  for (Vertex i = 0; i < sym.dimension(); ++i) {
    for (Vertex j = 0; j < sym.dimension(); ++j) CHECK(sym.weights.at(i, j) == sym.weights.at(j, i));
  }
}

TEST_CASE("desymmetrize the two-symbol optimum") {
  const AtspInstance inst = build_atsp(2);
  const SymInstance sym = symmetrize(inst, 100);
  const auto best = oracle::all_optimal_tours(sym.weights);
  CHECK(best.weight == 201);
  for (const auto& order : best.tours) {
    const Tour asym = desymmetrize_tour(Tour(order, sym.weights), sym, inst.weights);
    CHECK(asym.weight() == 1);
    CHECK(asym.rotated_to(0).order() == std::vector<Vertex>{0, 1});
  }
}

TEST_CASE("desymmetrize rejects broken tours") {
  const AtspInstance inst = build_atsp(2);
  const SymInstance sym = symmetrize(inst, 100);
  // 0 -> 1 joins two originals.
  const Tour bad({0, 1, 3, 2}, sym.weights);
  CHECK_THROWS_AS(desymmetrize_tour(bad, sym, inst.weights), StructuralError);
}

TEST_CASE("symmetric optimum minus offset is the asymmetric optimum") {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 2);
    const AtspInstance inst = random_instance(n, rng);
    const SymInstance sym = symmetrize(inst, default_big_m(inst));
    const auto best = oracle::all_optimal_tours(sym.weights);
    CHECK(best.weight - sym.offset == oracle::atsp_optimum(inst.weights));
    for (const auto& order : best.tours) {
      const Tour asym = desymmetrize_tour(Tour(order, sym.weights), sym, inst.weights);
      CHECK(asym.weight() == best.weight - sym.offset);
    }
  }
}

TEST_CASE("TSP file round trip keeps M and offset") {
  const SymInstance sym = symmetrize(build_atsp(3), 1000);
  std::ostringstream out;
  write_tsplib_tsp(sym, out);
  const std::string text = out.str();
  CHECK(text.find("TYPE: TSP\n") != std::string::npos);
  CHECK(text.find("COMMENT: jv-transform M=1000 OFFSET=6000\n") != std::string::npos);
  CHECK(text.find("DIMENSION: 12\n") != std::string::npos);
  std::istringstream in(text);
  const SymInstance back = parse_tsplib_tsp(in);
  CHECK(back.weights == sym.weights);
  CHECK(back.big_m == 1000);
  CHECK(back.offset == 6000);
  CHECK(back.original_size == 6);
}

TEST_CASE("five-symbol TSP file has 240 vertices") {
  const AtspInstance inst = build_atsp(5);
  std::ostringstream out;
  write_tsplib_tsp(symmetrize(inst, default_big_m(inst)), out);
  CHECK(out.str().find("DIMENSION: 240\n") != std::string::npos);
}
