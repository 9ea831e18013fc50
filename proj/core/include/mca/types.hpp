#pragma once

#include <Eigen/Core>

namespace mca {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mca
