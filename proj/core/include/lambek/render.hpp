// Copyright 2026 The Lambek Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAMBEK_RENDER_HPP_
#define LAMBEK_RENDER_HPP_

// Human-readable proof output: indented ASCII trees and LaTeX in the
// bussproofs style (\AxiomC, \UnaryInfC, \BinaryInfC).

#include <string>

#include "lambek/arrow.hpp"
#include "lambek/dertree.hpp"
#include "lambek/natded.hpp"

namespace lambek {

std::string render_tree(const Dertree& d);
std::string render_tree(const ArrowProof& p);
std::string render_tree(const NatDedNode& n);

std::string render_latex(const Dertree& d);
std::string render_latex(const ArrowProof& p);
std::string render_latex(const NatDedNode& n);

// Category and term text in math mode, without the surrounding $.
std::string latex_category(Form f);
std::string latex_term(Term t);

}  // namespace lambek

#endif  // LAMBEK_RENDER_HPP_
