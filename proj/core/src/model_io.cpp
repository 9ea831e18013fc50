#include "mca/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "mca/errors.hpp"

namespace mca {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_rows(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from(const Json& rows, Index expect_rows, Index expect_cols) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != expect_rows)
    throw Error("model record: bad matrix row count");
  Mat m(expect_rows, expect_cols);
  for (Index i = 0; i < expect_rows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expect_cols)
      throw Error("model record: bad matrix column count");
    for (Index j = 0; j < expect_cols; ++j)
      m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

Json vector_entries(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vec vector_from(const Json& entries, Index expect) {
  if (!entries.is_array() || static_cast<Index>(entries.size()) != expect)
    throw Error("model record: bad vector length");
  Vec v(expect);
  for (Index i = 0; i < expect; ++i)
    v(i) = entries[static_cast<std::size_t>(i)].get<double>();
  return v;
}

}  // namespace

ModelRecord to_record(const Model& model) {
  ModelRecord rec;
  rec.d1 = model.map1.A.cols();
  rec.d2 = model.map2.A.cols();
  rec.k = model.k;
  rec.A1 = model.map1.A;
  rec.b1 = model.map1.b;
  rec.A2 = model.map2.A;
  rec.b2 = model.map2.b;
  rec.objective = model.objective;
  return rec;
}

void save_model(const ModelRecord& record, const std::filesystem::path& path) {
  Json doc;
  doc["format"] = "mca-model/1";
  doc["d1"] = record.d1;
  doc["d2"] = record.d2;
  doc["k"] = record.k;
  doc["A1"] = matrix_rows(record.A1);
  doc["b1"] = vector_entries(record.b1);
  doc["A2"] = matrix_rows(record.A2);
  doc["b2"] = vector_entries(record.b2);
  doc["objective"] = record.objective;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_model: cannot open " + path.string());
  out << doc.dump(2) << "\n";
}

void save_model(const Model& model, const std::filesystem::path& path) {
  save_model(to_record(model), path);
}

ModelRecord load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_model: cannot open " + path.string());
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("load_model: malformed JSON in " + path.string() + ": " + e.what());
  }
  if (doc.value("format", "") != "mca-model/1")
    throw Error("load_model: unrecognized format in " + path.string());
  ModelRecord rec;
  rec.d1 = doc.at("d1").get<Index>();
  rec.d2 = doc.at("d2").get<Index>();
  rec.k = doc.at("k").get<Index>();
  const Index rows = rec.k > 0 ? rec.k : 1;  // degenerate maps land in R^1
  rec.A1 = matrix_from(doc.at("A1"), rows, rec.d1);
  rec.b1 = vector_from(doc.at("b1"), rows);
  rec.A2 = matrix_from(doc.at("A2"), rows, rec.d2);
  rec.b2 = vector_from(doc.at("b2"), rows);
  rec.objective = doc.at("objective").get<double>();
  return rec;
}

}  // namespace mca
