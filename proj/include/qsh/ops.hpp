// Copyright 2026 The qsh Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSH_OPS_HPP
#define QSH_OPS_HPP

#include <string_view>

namespace qsh {

/// The tridendriform products and their usual sums.
/// Star = Prec + Succ + Dot, PrecEq = Prec + Dot, SuccEq = Succ + Dot.
/// Sh is the shuffle product (the dendriform sum with Dot set to zero); only
/// T(V) interprets it directly.
enum class Op { Prec, Succ, Dot, Star, PrecEq, SuccEq, Sh };

Op parse_op(std::string_view name);
std::string_view to_string(Op op);

}  // namespace qsh

#endif  // QSH_OPS_HPP
