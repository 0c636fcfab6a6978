#pragma once

#include <Eigen/Dense>

namespace xspc {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

} // namespace xspc
