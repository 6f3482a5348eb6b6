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

#include "qsh/ops.hpp"

#include <string>

#include "qsh/error.hpp"

namespace qsh {

Op parse_op(std::string_view name) {
    if (name == "prec") return Op::Prec;
    if (name == "succ") return Op::Succ;
    if (name == "dot") return Op::Dot;
    if (name == "star") return Op::Star;
    if (name == "preceq") return Op::PrecEq;
    if (name == "succeq") return Op::SuccEq;
    if (name == "sh") return Op::Sh;
    if (name == "qsh") return Op::Star;
    throw Error(ErrorKind::Parse, "unknown op '" + std::string(name) + "'");
}

std::string_view to_string(Op op) {
    switch (op) {
        case Op::Prec: return "prec";
        case Op::Succ: return "succ";
        case Op::Dot: return "dot";
        case Op::Star: return "star";
        case Op::PrecEq: return "preceq";
        case Op::SuccEq: return "succeq";
        case Op::Sh: return "sh";
    }
    return "?";
}

}  // namespace qsh
