#include <doctest.h>

#include "json.hpp"
#include <sstream>

#include "fibcube/errors.hpp"
#include "fibcube/graph_io.hpp"

using namespace fibcube;

TEST_CASE("edge list of K_2") {
  std::ostringstream os;
  write_edgelist(os, build_graph({Family::I, 1, 1, 1}));
  CHECK(os.str() == "2 1\n0 1\n");
}

TEST_CASE("edge list round trip keeps the graph") {
  for (Family f : {Family::O, Family::I}) {
    const CubeGraph g = build_graph({f, 2, 2, 7});
    std::ostringstream os;
    write_edgelist(os, g);
    std::istringstream is(os.str());
    const EdgeList e = read_edgelist(is);
    CHECK(e.order == g.order());
    REQUIRE(e.edges.size() == g.size());
    std::vector<std::vector<Rank>> adj(e.order);
    for (auto [u, v] : e.edges) {
      CHECK(u < v);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    CHECK(std::is_sorted(e.edges.begin(), e.edges.end()));
    for (Rank v = 0; v < g.order(); ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      const auto nb = g.neighbors(v);
      CHECK(adj[v] == std::vector<Rank>(nb.begin(), nb.end()));
    }
  }
}

TEST_CASE("malformed edge lists") {
  auto read = [](const std::string& text) {
    std::istringstream is(text);
    return read_edgelist(is);
  };
  CHECK_THROWS_AS(read("x y\n"), ContractError);
  CHECK_THROWS_AS(read("2 1\n0 2\n"), ContractError);
  CHECK_THROWS_AS(read("3 2\n0 1\n"), ContractError);
}

TEST_CASE("DOT export labels every vertex with its word") {
  std::ostringstream os;
  write_dot(os, build_graph({Family::I, 1, 1, 5}));
  const std::string dot = os.str();
  CHECK(dot.rfind("graph \"I_1_1_5\" {", 0) == 0);
  std::size_t labels = 0;
  for (auto pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) {
    ++labels;
  }
  CHECK(labels == 13);
  CHECK(dot.find("label=\"10101\"") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("JSON export") {
  std::ostringstream os;
  write_json(os, build_graph({Family::O, 2, 2, 5}));
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["order"] == 12);
  CHECK(j["size"] == 17);
  CHECK(j["vertices"].size() == 12);
  CHECK(j["vertices"][11] == "10100");
  CHECK(j["edges"].size() == 17);
  CHECK(j["params"]["family"] == "O");
}
