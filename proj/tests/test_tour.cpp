#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "superperm/atsp_instance.hpp"
#include "superperm/error.hpp"
#include "superperm/tour.hpp"

using namespace superperm;

TEST_CASE("Tour validates its order and weight") {
  const AtspInstance inst = build_atsp(3);
  const Tour t({0, 1, 2, 3, 4, 5}, inst.weights);
  CHECK(t.weight() == oracle::tour_weight(t.order(), inst.weights));
  CHECK_THROWS_AS(Tour({0, 1, 2, 3, 4, 4}, inst.weights), StructuralError);
  CHECK_THROWS_AS(Tour({0, 1, 2, 3, 4}, inst.weights), StructuralError);
  CHECK_THROWS_AS(Tour({0, 1, 2, 3, 4, 5}, t.weight() + 1, inst.weights), StructuralError);
  CHECK(Tour({0, 1, 2, 3, 4, 5}, t.weight(), inst.weights) == t);
}

TEST_CASE("rotation keeps the circuit") {
  const AtspInstance inst = build_atsp(3);
  const Tour t({3, 1, 0, 5, 2, 4}, inst.weights);
  const Tour r = t.rotated_to(0);
  CHECK(r.order() == std::vector<Vertex>{0, 5, 2, 4, 3, 1});
  CHECK(r.weight() == t.weight());
}

TEST_CASE("TOUR file round trip") {
  const AtspInstance inst = build_atsp(3);
  const Tour t({0, 2, 4, 1, 3, 5}, inst.weights);
  std::ostringstream out;
  write_tsplib_tour(t, "t3", "weight=" + std::to_string(t.weight()), out);
  const std::string text = out.str();
  CHECK(text.find("TYPE: TOUR\n") != std::string::npos);
  CHECK(text.find("TOUR_SECTION\n1\n3\n5\n2\n4\n6\n-1\nEOF\n") != std::string::npos);

  std::istringstream in(text);
  const TourFile file = parse_tsplib_tour(in);
  CHECK(file.name == "t3");
  CHECK(file.dimension == 6);
  CHECK(file.order == t.order());
}

TEST_CASE("TOUR file errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_tsplib_tour(in);
  };
  CHECK_THROWS_AS(parse("TYPE: TOUR\nDIMENSION: 3\nTOUR_SECTION\n1\n2\n2\n-1\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse("TYPE: TOUR\nDIMENSION: 3\nTOUR_SECTION\n1\n2\n4\n-1\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse("TYPE: TOUR\nDIMENSION: 3\nTOUR_SECTION\n1\n2\n-1\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse("TYPE: ATSP\nDIMENSION: 3\nTOUR_SECTION\n1\n2\n3\n-1\nEOF\n"), ParseError);
  CHECK(parse("TYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n3\n1\n2\n-1\nEOF\n").order ==
        std::vector<Vertex>{2, 0, 1});
}
