#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "twosep/corpus.hpp"
#include "twosep/errors.hpp"
#include "twosep/families.hpp"
#include "twosep/io.hpp"

using namespace twosep;

TEST_CASE("parse edge lists") {
  const MultiGraph g = parse_edge_list_string("# a triangle with a doubled side\n3 3\n1 2\n2 3 2  # doubled\n\n3 1 1\n");
  CHECK(g == MultiGraph::build(3, {{1, 2}, {2, 3, 2}, {1, 3}}));
  CHECK(parse_edge_list_string("1 0\n").vertex_count() == 1);
  CHECK(parse_edge_list_string("2 2\n1 2\n2 1\n").multiplicity(1, 2) == 2);
}

TEST_CASE("malformed edge lists raise ParseError") {
  CHECK_THROWS_AS(parse_edge_list_string(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 2\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list_string("3 1\n1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(read_edge_list("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("serialize writes sorted pairs and omits unit multiplicities") {
  const MultiGraph g = MultiGraph::build(4, {{3, 4}, {2, 1, 3}, {1, 3}});
  CHECK(serialize_edge_list(g) == "4 3\n1 2 3\n1 3\n3 4\n");
  CHECK(serialize_edge_list(gen_straight(4)) == "4 5\n1 2\n1 3\n2 3\n2 4\n3 4\n");
}

TEST_CASE("property: parse and serialize round-trip") {
  auto graphs = random_corpus(60, 3);
  auto doubled = multiplicity2_corpus(4);
  graphs.insert(graphs.end(), doubled.begin(), doubled.end());
  graphs.push_back(gen_sierpinski(2).graph);
  for (const MultiGraph& g : graphs) {
    const std::string text = serialize_edge_list(g);
    const MultiGraph back = parse_edge_list_string(text);
    CHECK(back == g);
    CHECK(serialize_edge_list(back) == text);
  }
}

TEST_CASE("parse ignores line order") {
  const std::string sorted = "4 3\n1 2\n1 3 2\n3 4\n";
  const std::string shuffled = "4 3\n3 4\n# comment\n3 1 2\n2 1\n";
  CHECK(serialize_edge_list(parse_edge_list_string(shuffled)) == sorted);
}

TEST_CASE("read_edge_list reads files") {
  const std::string path = "twosep_io_test_graph.txt";
  {
    std::ofstream out(path);
    out << serialize_edge_list(gen_straight(6));
  }
  CHECK(read_edge_list(path) == gen_straight(6));
  std::remove(path.c_str());
}
