#include "doctest.h"
#include "wpi/errors.hpp"
#include "wpi/json_io.hpp"

using namespace wpi;

namespace {

const Pyramid gl3({1, 1, 1});

std::string message_of(const std::string& text) {
  try {
    parse_json(text, "doc.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(scalar_to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(scalar_to_json(Scalar(5)) == "5");
  CHECK(scalar_from_json(Json("6/8")) == Scalar(3, 4));
  CHECK(scalar_from_json(Json(-2)) == Scalar(-2));
  CHECK_THROWS_AS(scalar_from_json(Json(0.5)), InputError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), InputError);
  CHECK_THROWS_AS(scalar_from_json(Json("x")), InputError);
}

TEST_CASE("parse errors carry a position") {
  CHECK(message_of("{\"rows\": [1, 2,]}").find("doc.json:1:") == 0);
  CHECK(message_of("{\n  \"rows\":\n  [1 2]\n}").find("doc.json:3:") == 0);
  CHECK(message_of("{}") == "");
}

TEST_CASE("schema version") {
  CHECK_NOTHROW(pyramid_from_json(parse_json(R"({"v":1,"rows":[1,2]})")));
  CHECK_NOTHROW(pyramid_from_json(parse_json(R"({"rows":[1,2]})")));
  CHECK_THROWS_AS(pyramid_from_json(parse_json(R"({"v":2,"rows":[1,2]})")), InputError);
}

TEST_CASE("pyramid round trip") {
  Pyramid pi({1, 2, 2});
  CHECK(to_json(pi).dump() == R"({"rows":[1,2,2]})");
  CHECK(pyramid_from_json(to_json(pi)) == pi);
  CHECK_THROWS_AS(pyramid_from_json(parse_json(R"({"rows":[2,1]})")), InputError);
  CHECK_THROWS_AS(pyramid_from_json(parse_json(R"({"rows":"1,2"})")), InputError);
  CHECK_THROWS_AS(pyramid_from_json(parse_json(R"([1,2])")), InputError);
}

TEST_CASE("triples") {
  CHECK(parse_triple("1,3,2") == TriIndex{1, 3, 2});
  CHECK(parse_triple(" 2, 2,1 ") == TriIndex{2, 2, 1});
  CHECK_THROWS_AS(parse_triple("1,3"), InputError);
  CHECK_THROWS_AS(parse_triple("1;3;2"), InputError);
  CHECK_THROWS_AS(parse_triple("1,3,2,"), InputError);
  CHECK(triple_from_json(to_json(TriIndex{2, 3, 1})) == TriIndex{2, 3, 1});
}

TEST_CASE("relation set round trip") {
  for (const auto& pi : {gl3, Pyramid({1, 2}), Pyramid({2, 2})}) {
    auto s = RelationSet::standard(pi);
    CHECK(relations_from_json(to_json(s), pi) == s);
  }
  auto doc = parse_json(R"({"edges":[{"greater":{"k":1,"i":2,"j":1},"lesser":{"k":1,"i":1,"j":1},"strict":false}]})");
  auto c = relations_from_json(doc, gl3);
  REQUIRE(c.size() == 1);
  CHECK(c.edges().begin()->greater == TriIndex{1, 2, 1});

  // (1,1,1) >= (1,2,1) points the wrong way
  auto bad = parse_json(R"({"edges":[{"greater":{"k":1,"i":1,"j":1},"lesser":{"k":1,"i":2,"j":1},"strict":false}]})");
  CHECK_THROWS_AS(relations_from_json(bad, gl3), InputError);
  auto outside = parse_json(R"({"edges":[{"greater":{"k":2,"i":2,"j":1},"lesser":{"k":1,"i":1,"j":1},"strict":false}]})");
  CHECK_THROWS_AS(relations_from_json(outside, gl3), InputError);
  auto no_strict = parse_json(R"({"edges":[{"greater":{"k":1,"i":2,"j":1},"lesser":{"k":1,"i":1,"j":1}}]})");
  CHECK_THROWS_AS(relations_from_json(no_strict, gl3), InputError);
}

TEST_CASE("tableau round trip") {
  Pyramid pi({1, 2});
  auto l = *sample_satisfying_tableau(RelationSet::standard(pi), 1, 0);
  CHECK(tableau_from_json(to_json(l)) == l);

  Json doc = to_json(l);
  Json reversed = doc;
  std::reverse(reversed["entries"].begin(), reversed["entries"].end());
  CHECK(tableau_from_json(reversed) == l);

  Json missing = doc;
  missing["entries"].erase(missing["entries"].begin());
  CHECK_THROWS_AS(tableau_from_json(missing), InputError);

  Json twice = doc;
  twice["entries"].push_back(doc["entries"][0]);
  CHECK_THROWS_AS(tableau_from_json(twice), InputError);

  Json offset = doc;
  offset["entries"][0]["offset"] = "1";
  CHECK_THROWS_AS(tableau_from_json(offset), InputError);
}

TEST_CASE("deltas list nonzero entries") {
  TableauDelta d(gl3);
  CHECK(delta_to_json(gl3, d).empty());
  d.set(gl3, {1, 2, 2}, -1);
  CHECK(delta_to_json(gl3, d).dump() == R"([{"i":2,"j":2,"k":1,"z":-1}])");
}

TEST_CASE("weights") {
  auto in = weights_from_json(parse_json(R"({"v":1,"weights":[["1/2","0"],[3,"-1"]]})"));
  REQUIRE(in.weights.size() == 2);
  CHECK(in.weights[0].lambda[0] == Scalar(1, 2));
  CHECK(in.weights[1].lambda[0] == 3);
  CHECK(in.points == std::vector<Scalar>{0, 0});
  auto pts = weights_from_json(parse_json(R"({"weights":[["0"]],"points":["1/3"]})"));
  CHECK(pts.points[0] == Scalar(1, 3));
  CHECK_THROWS_AS(weights_from_json(parse_json(R"({"weights":[]})")), InputError);
  CHECK_THROWS_AS(weights_from_json(parse_json(R"({"weights":[[]]})")), InputError);
  CHECK_THROWS_AS(weights_from_json(parse_json(R"({"weights":[["0"]],"points":[]})")), InputError);
  CHECK(to_json(in.weights[0]).dump() == R"(["1/2","0"])");
}

TEST_CASE("certificates re-validate") {
  RelationSet p(gl3, {{{1, 3, 2}, {1, 2, 2}, false}, {{1, 2, 1}, {1, 3, 2}, true}});
  auto cert = is_admissible(p);
  Json j = to_json(cert);
  CHECK(j["admissible"] == false);
  CHECK(j["reason"] == "bridge");
  std::vector<TriIndex> back;
  for (const auto& t : j["triples"]) back.push_back(triple_from_json(t));
  CHECK(back == cert.triples);
}

TEST_CASE("dump is newline terminated and stable") {
  Json j = {{"b", 1}, {"a", {1, 2}}};
  std::string s = dump(j);
  CHECK(s.back() == '\n');
  CHECK(s == dump(parse_json(s)));
  CHECK(s.find("\"a\"") < s.find("\"b\""));
}
