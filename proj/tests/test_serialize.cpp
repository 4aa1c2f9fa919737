#include "isocoh/classical.hpp"
#include "isocoh/serialize.hpp"

#include <doctest.h>

using namespace isocoh;

TEST_CASE("sparse matrices round-trip") {
  Mat m = Mat::Zero(3, 4);
  m(0, 1) = 0.1;
  m(2, 3) = -1.0 / 3.0;
  const Json j = sparse_to_json(m);
  CHECK(j["entries"].size() == 2);
  CHECK(sparse_from_json(j) == m);
  CHECK(sparse_from_json(Json::parse(j.dump())) == m);
  Json bad = j;
  bad["entries"].push_back(Json::array({5, 0, 1.0}));
  CHECK_THROWS(sparse_from_json(bad));
}

TEST_CASE("Lie algebras round-trip exactly through text") {
  LieAlgebra g = su_standard(3).algebra();
  Mat ip = Mat::Identity(8, 8);
  ip(0, 0) = 2.0;
  g.set_inner_product(ip);
  g.set_labels({"a", "b", "c", "d", "e", "f", "g", "h"});
  const Json j = to_json(g);
  CHECK(j.contains("inner_product"));
  CHECK(lie_algebra_from_json(Json::parse(j.dump())) == g);
  CHECK_FALSE(to_json(LieAlgebra(2)).contains("inner_product"));
  CHECK_FALSE(to_json(LieAlgebra(2)).contains("labels"));
}

TEST_CASE("malformed Lie algebra JSON is rejected") {
  CHECK_THROWS(lie_algebra_from_json(Json::parse(R"({"dim": 2, "c": [[1, 0, 0, 1.0]]})")));
  CHECK_THROWS(lie_algebra_from_json(Json::parse(R"({"dim": 2, "c": [[0, 1, 2, 1.0]]})")));
  CHECK_THROWS(lie_algebra_from_json(Json::parse(R"({"dim": -1, "c": []})")));
  CHECK_THROWS(lie_algebra_from_json(Json::parse(R"({"c": []})")));
}

TEST_CASE("representations round-trip") {
  const Representation r = sp_standard(2);
  const Representation back = representation_from_json(Json::parse(to_json(r).dump()));
  CHECK(back.algebra() == r.algebra());
  REQUIRE(back.matrices().size() == r.matrices().size());
  for (std::size_t i = 0; i < r.matrices().size(); ++i) CHECK(back.matrix(i) == r.matrix(i));
  CHECK(back.inner_product() == r.inner_product());
}

TEST_CASE("catalog spaces round-trip exactly") {
  for (const std::string& id : catalog_ids()) {
    CAPTURE(id);
    const ReductiveSpace s = build_catalog_space(id);
    const ReductiveSpace back = space_from_json(Json::parse(to_json(s).dump()));
    CHECK(back.id == s.id);
    CHECK(back.algebra == s.algebra);
    CHECK(back.k_indices == s.k_indices);
    CHECK(back.blocks == s.blocks);
    CHECK(back.flags == s.flags);
    REQUIRE(back.extra_kernel_elements.size() == s.extra_kernel_elements.size());
    for (std::size_t i = 0; i < s.extra_kernel_elements.size(); ++i) {
      CHECK(back.extra_kernel_elements[i] == s.extra_kernel_elements[i]);
    }
  }
}

TEST_CASE("space block indices are range checked") {
  Json j = to_json(build_catalog_space("N(1,1)"));
  j["blocks"]["m2"].push_back(99);
  CHECK_THROWS(space_from_json(j));
}
