#include "isocoh/serialize.hpp"

#include <stdexcept>

namespace isocoh {

namespace {

Json dense_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Mat dense_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw std::invalid_argument("json: dense matrix has wrong size");
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) throw std::invalid_argument("json: dense row size");
    for (int c = 0; c < n; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

bool is_identity(const Mat& m) { return m == Mat::Identity(m.rows(), m.cols()); }

}  // namespace

Json sparse_to_json(const Mat& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0.0) entries.push_back(Json::array({i, j, m(i, j)}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat sparse_from_json(const Json& j) {
  const int r = j.at("rows").get<int>();
  const int c = j.at("cols").get<int>();
  if (r < 0 || c < 0) throw std::invalid_argument("json: negative matrix size");
  Mat m = Mat::Zero(r, c);
  for (const Json& e : j.at("entries")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    if (a < 0 || a >= r || b < 0 || b >= c) throw std::invalid_argument("json: matrix entry out of range");
    m(a, b) = e.at(2).get<double>();
  }
  return m;
}

Json to_json(const LieAlgebra& alg) {
  const int n = alg.dim();
  Json c = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = alg.c(i, j, k);
        if (v != 0.0) c.push_back(Json::array({i, j, k, v}));
      }
    }
  }
  Json out{{"dim", n}, {"c", c}};
  if (!is_identity(alg.inner_product())) out["inner_product"] = dense_to_json(alg.inner_product());
  if (!alg.labels().empty()) out["labels"] = alg.labels();
  return out;
}

LieAlgebra lie_algebra_from_json(const Json& j) {
  const int n = j.at("dim").get<int>();
  if (n < 0) throw std::invalid_argument("json: negative dimension");
  LieAlgebra alg(n);
  for (const Json& e : j.at("c")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    const int k = e.at(2).get<int>();
    if (a < 0 || b < 0 || k < 0 || a >= n || b >= n || k >= n) throw std::invalid_argument("json: index out of range");
    if (a >= b) throw std::invalid_argument("json: structure constants need i < j");
    alg.set_constant(a, b, k, e.at(3).get<double>());
  }
  if (j.contains("inner_product")) alg.set_inner_product(dense_from_json(j["inner_product"], n));
  if (j.contains("labels")) alg.set_labels(j["labels"].get<std::vector<std::string>>());
  return alg;
}

Json to_json(const Representation& rep) {
  Json out = to_json(rep.algebra());
  Json mats = Json::array();
  for (const Mat& m : rep.matrices()) mats.push_back(sparse_to_json(m));
  out["matrices"] = mats;
  out["space_dim"] = rep.space_dim();
  if (!is_identity(rep.inner_product())) out["space_inner_product"] = dense_to_json(rep.inner_product());
  return out;
}

Representation representation_from_json(const Json& j) {
  LieAlgebra alg = lie_algebra_from_json(j);
  std::vector<Mat> mats;
  for (const Json& m : j.at("matrices")) mats.push_back(sparse_from_json(m));
  const int d = j.at("space_dim").get<int>();
  Mat inner = j.contains("space_inner_product") ? dense_from_json(j["space_inner_product"], d) : Mat::Identity(d, d);
  return Representation(std::move(alg), std::move(mats), std::move(inner));
}

Json to_json(const CliffordModule& module) {
  Json gammas = Json::array();
  for (const Mat& g : module.gammas) gammas.push_back(sparse_to_json(g));
  return Json{{"n", module.n}, {"dim", module.dim}, {"square", module.square}, {"gammas", gammas}};
}

Json to_json(const ReductiveSpace& space) {
  Json out = to_json(space.algebra);
  out["id"] = space.id;
  Json blocks{{"k", space.k_indices}};
  if (!space.blocks.empty()) blocks["m1"] = space.blocks[0];
  if (space.blocks.size() > 1) blocks["m2"] = space.blocks[1];
  out["blocks"] = blocks;
  out["flags"] = space.flags;
  Json extra = Json::array();
  for (const Mat& e : space.extra_kernel_elements) extra.push_back(sparse_to_json(e));
  out["extra_kernel_elements"] = extra;
  return out;
}

ReductiveSpace space_from_json(const Json& j) {
  ReductiveSpace s;
  s.algebra = lie_algebra_from_json(j);
  s.id = j.value("id", std::string());
  const Json& b = j.at("blocks");
  s.k_indices = b.at("k").get<std::vector<int>>();
  if (b.contains("m1")) s.blocks.push_back(b["m1"].get<std::vector<int>>());
  if (b.contains("m2")) s.blocks.push_back(b["m2"].get<std::vector<int>>());
  if (j.contains("flags")) s.flags = j["flags"].get<std::vector<std::string>>();
  if (j.contains("extra_kernel_elements")) {
    for (const Json& e : j["extra_kernel_elements"]) s.extra_kernel_elements.push_back(sparse_from_json(e));
  }
  for (int i : s.m_indices()) {
    if (i < 0 || i >= s.dim()) throw std::invalid_argument("json: block index out of range");
  }
  return s;
}

}  // namespace isocoh
