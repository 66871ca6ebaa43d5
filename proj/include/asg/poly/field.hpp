// Copyright 2026 The asg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace asg::poly {

/// F_q for q in {2, 3, 4, 5, 7, 8, 9}, table driven.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of t^0, t^1, ... in F_p[t]/(m(t)), with m = t^2+t+1 (q=4),
/// t^3+t+1 (q=8) and t^2+1 (q=9). For prime q the encoding is the residue.
class FiniteField {
   public:
    using Elem = std::uint8_t;

    /// Shared instance; throws std::invalid_argument for unsupported q.
    static const FiniteField& get(unsigned q);
    static std::span<const unsigned> supported_orders();

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Throws std::domain_error for 0.
    Elem inv(Elem a) const;

   private:
    explicit FiniteField(unsigned q);

    unsigned q_;
    unsigned p_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

}  // namespace asg::poly
