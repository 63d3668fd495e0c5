/*
 * Copyright 2026 The kleene authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef KLEENE_KLEENE_HPP
#define KLEENE_KLEENE_HPP

#include "kleene/errors.hpp"
#include "kleene/semiring.hpp"
#include "kleene/opcount.hpp"
#include "kleene/integral.hpp"
#include "kleene/matrix.hpp"
#include "kleene/closure.hpp"
#include "kleene/graph.hpp"
#include "kleene/interval.hpp"
#include "kleene/io.hpp"

#endif  // KLEENE_KLEENE_HPP
