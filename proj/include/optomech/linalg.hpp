#pragma once

#include <Eigen/Dense>

namespace optomech {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat2 = Eigen::Matrix<double, 2, 2>;

// Quadrature ordering of the 8-dimensional fluctuation vector.
enum QuadIndex { iX = 0, iY = 1, iQ1 = 2, iP1 = 3, iQ2 = 4, iP2 = 5, iq = 6, ip = 7 };

}  // namespace optomech
