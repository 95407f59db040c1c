/*
 * Copyright 2026 The logsymp Authors
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

#pragma once

#include "logsymp/arrangement.hpp"
#include "logsymp/classifier.hpp"
#include "logsymp/complex_model.hpp"
#include "logsymp/diagram.hpp"
#include "logsymp/error.hpp"
#include "logsymp/germ_cohomology.hpp"
#include "logsymp/leaf_analysis.hpp"
#include "logsymp/matrix.hpp"
#include "logsymp/pfaffian.hpp"
#include "logsymp/polynomial.hpp"
#include "logsymp/rational.hpp"
