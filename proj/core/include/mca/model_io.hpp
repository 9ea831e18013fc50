#pragma once

#include <filesystem>

#include "mca/model.hpp"

namespace mca {

/// Serializable slice of a fitted model. Field order in the JSON record is
/// fixed: d1, d2, k, A1, b1, A2, b2, objective. Matrices are stored as
/// arrays of rows; doubles round-trip exactly.
struct ModelRecord {
  Index d1 = 0;
  Index d2 = 0;
  Index k = 0;
  Mat A1;
  Vec b1;
  Mat A2;
  Vec b2;
  double objective = 0.0;
};

ModelRecord to_record(const Model& model);

void save_model(const ModelRecord& record, const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path);

ModelRecord load_model(const std::filesystem::path& path);

}  // namespace mca
