#include "doctest.h"

#include "gibbslab/model_io.hpp"

using namespace gibbslab;

TEST_CASE("model json round trip") {
  const auto p = PairInteraction::potts(3, 0.5, 1.5);
  const auto j = model_to_json(p);
  const auto back = model_from_json(j);
  CHECK(back.space() == p.space());
  CHECK(back.J() == 0.5);
  CHECK(back.beta() == 1.5);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(back.rho(a, b) == p.rho(a, b));
  }
}

TEST_CASE("model json validation") {
  CHECK_THROWS(model_from_json(nlohmann::json::parse(R"({"spins":[1,0],"rho":[[1,0],[0,1]],"J":1,"beta":1})")));
  CHECK_THROWS(model_from_json(nlohmann::json::parse(R"({"spins":[0,1],"rho":[[1,0]],"J":1,"beta":1})")));
  CHECK_THROWS(model_from_json(nlohmann::json::parse(R"({"spins":[0,1],"rho":[[1,0],[0,1]],"J":1})")));
}

TEST_CASE("builtin models") {
  CHECK(is_builtin_model("ising"));
  CHECK(is_builtin_model("potts:4"));
  CHECK_THROWS(builtin_model("potts:1", 1.0, 0.3));
  CHECK_FALSE(is_builtin_model("xy"));
  CHECK(builtin_model("ising", 1.0, 0.3).is_ising());
  CHECK(builtin_model("potts:4", 1.0, 0.3).num_spins() == 4);
}

TEST_CASE("configuration and field json") {
  const Configuration c(std::map<Vertex, double>{{3, 1.0}, {10, -1.0}});
  const auto j = configuration_to_json(c);
  CHECK(configuration_from_json(j) == c);
  const auto h = field_from_json(nlohmann::json::parse(R"({"0": 0.5, "4": -1})"));
  CHECK(h.at(0) == 0.5);
  CHECK(h.at(4) == -1.0);
  CHECK_FALSE(h.get(1).has_value());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(2.0634370688955605) == "2.06343706889556");
  CHECK(round15(1.0 / 3.0) == 0.333333333333333);
}
