// core/include/againvc/train/adam.hpp

// Copyright 2026  AGAIN-VC C++ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "againvc/model/network.hpp"

namespace againvc {

// Adaptive moment estimation with bias correction:
//   m <- b1 m + (1-b1) g          m_hat = m / (1 - b1^t)
//   v <- b2 v + (1-b2) g^2        v_hat = v / (1 - b2^t)
//   theta <- theta - lr * m_hat / (sqrt(v_hat) + eps)
class Adam {
 public:
  Adam(const std::vector<Param*>& params, double lr, double beta1 = 0.9, double beta2 = 0.999,
       double eps = 1e-8);

  void step();
  long step_count() const { return t_; }

 private:
  std::vector<Param*> params_;
  std::vector<Mat> m_;
  std::vector<Mat> v_;
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
};

}  // namespace againvc
