/**************************************************************************
 * mds.hpp
 *
 * Copyright 2026 The mdscount Authors
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
 **************************************************************************/
#pragma once

// Umbrella header.

#include "mds/asymptotics.hpp"
#include "mds/bigint.hpp"
#include "mds/census.hpp"
#include "mds/error.hpp"
#include "mds/exterior.hpp"
#include "mds/field.hpp"
#include "mds/form_weight.hpp"
#include "mds/grassmann_code.hpp"
#include "mds/grassmannian.hpp"
#include "mds/matrix.hpp"
#include "mds/multi_index.hpp"
#include "mds/parallel.hpp"
#include "mds/sections.hpp"
