#include <doctest.h>

#include <netcx/error.hpp>
#include <netcx/generators.hpp>
#include <netcx/io.hpp>

#include <functional>
#include <sstream>

using namespace netcx;

namespace {

DirectedGraph read(const std::string& text, EdgeListOptions opts = {}) {
  std::istringstream in(text);
  return read_edge_list(in, opts);
}

DynamicsAssignment groups(const std::string& text, const DirectedGraph& g, double tol = 0.0) {
  std::istringstream in(text);
  return read_groups(in, g, tol);
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("edge list basics") {
    auto g = read("a,b\nb,c");
    CHECK(g.node_count() == 3);
    CHECK(g == DirectedGraph(3, {{0, 1}, {1, 2}}));
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");

    auto w = read("0,1,2.5");
    CHECK(w.node_count() == 2);
    REQUIRE(w.has_weights());
    CHECK(w.weights()[0] == 2.5);
    CHECK(w.edges()[0] == Edge{0, 1});
  }

  TEST_CASE("separators, comments and whitespace") {
    auto g = read("# header comment\n\nx\ty\r\n  y , z  \n#x,z\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.node_count() == 3);
  }

  TEST_CASE("header fixes node count") {
    auto g = read("n=5\n0,1\n3,4\n");
    CHECK(g.node_count() == 5);
    CHECK(g.labels().empty());
    CHECK(read("n=4\n").node_count() == 4);
    CHECK(read("").node_count() == 0);
    CHECK_THROWS_AS(read("", {.require_header = true}), InputError);
    CHECK(error_of([] { read("n=2\n0,2\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { read("0,1\nn=3\n"); }).find("line 2") != std::string::npos);
  }

  TEST_CASE("errors") {
    CHECK(error_of([] { read("a,b\na,b"); }).find("duplicate edge (a,b)") != std::string::npos);
    CHECK(error_of([] { read("a,b\nc\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { read("a,b,1\nb,c\n"); }).find("line 2") != std::string::npos);
    CHECK(error_of([] { read("a,b,zero\n"); }).find("line 1") != std::string::npos);
    CHECK(error_of([] { read("a,b,0\n"); }).find("nonzero") != std::string::npos);
    CHECK(error_of([] { read("a,b,c,d\n"); }).find("line 1") != std::string::npos);
    CHECK_THROWS_AS(parse_edge_list("/nonexistent/edges.csv"), InputError);
  }

  TEST_CASE("round trip through write_edge_list") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorSpec s;
      s.model = GraphModel::watts_strogatz;
      s.n = 30;
      s.ring_degree = 4;
      s.p = 0.3;
      s.seed = seed;
      auto g = generate(s);
      std::ostringstream out;
      write_edge_list(out, g);
      CHECK(read(out.str()) == g);

      auto rw = rewire_uniform(g, seed).with_weights(std::vector<double>(g.edge_count(), -0.1 * (seed + 1)));
      std::ostringstream out2;
      write_edge_list(out2, rw);
      CHECK(read(out2.str()) == rw);
    }
    auto labelled = read("a,b\nb,c\n");
    std::ostringstream out;
    write_edge_list(out, labelled);
    CHECK(out.str().find("# node 0 a") != std::string::npos);
    CHECK(read(out.str()) == labelled);
  }

  TEST_CASE("groups by label") {
    auto g = read("a,b\nb,c\n");
    auto one = groups("a,g1\nb,g1\nc,g1\n", g);
    CHECK(one.block_count() == 1);
    auto each = groups("c,z\nb,y\na,x\n", g);
    CHECK(each.block_count() == 3);
    CHECK(each.block_labels()[0] == "x");
  }

  TEST_CASE("groups by gamma value") {
    auto g = read("a,b\nb,c\n");
    auto d = groups("a,-0.5\nb,-0.5\nc,-0.25\n", g);
    CHECK(d.block_count() == 2);
    REQUIRE(d.has_poles());
    CHECK(d.node_poles() == std::vector<double>{-0.5, -0.5, -0.25});
    auto merged = groups("a,-0.5\nb,-0.5000001\nc,-0.25\n", g, 1e-3);
    CHECK(merged.block_count() == 2);
  }

  TEST_CASE("group errors") {
    auto g = read("a,b\nb,c\n");
    CHECK(error_of([&] { groups("a,g\nb,g\n", g); }).find("'c'") != std::string::npos);
    CHECK(error_of([&] { groups("a,g\nb,g\nc,g\nd,g\n", g); }).find("unknown node 'd'") !=
          std::string::npos);
    CHECK(error_of([&] { groups("a,g\nb,0.5\nc,g\n", g); }).find("mixed") != std::string::npos);
    CHECK(error_of([&] { groups("a,g\na,h\nb,g\nc,g\n", g); }).find("already assigned") !=
          std::string::npos);
    auto indexed = read("n=3\n0,1\n");
    CHECK(groups("0,a\n1,a\n2,b\n", indexed).block_count() == 2);
  }

  TEST_CASE("report documents") {
    CHECK(format_ratio(0.0) == "0.0000");
    CHECK(format_ratio(252.0 / 279.0) == "0.9032");
    CHECK(format_ratio(1.0) == "1.0000");
    CHECK(error_json("input", "bad \"x\"") ==
          R"({"error":{"kind":"input","message":"bad \"x\""}})");
    auto g = read("a,b\nb,c\nc,a\n");
    auto r = structural_complexity(g, DynamicsAssignment::from_labels(std::vector<std::string>(3, "g")));
    const auto doc = to_json(r);
    CHECK(doc.find("\"phi_structural\": 3") != std::string::npos);
    CHECK(doc.find("\"phi_over_n\": \"1.0000\"") != std::string::npos);
    CHECK(doc.back() == '\n');
  }
}
