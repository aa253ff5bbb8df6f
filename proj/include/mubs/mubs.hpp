/**************************************************************************
 * Copyright 2026 The mubs Authors
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

#include "mubs/constructions.hpp"
#include "mubs/error.hpp"
#include "mubs/family.hpp"
#include "mubs/field.hpp"
#include "mubs/galois_ring.hpp"
#include "mubs/geometry.hpp"
#include "mubs/module.hpp"
#include "mubs/poly.hpp"
#include "mubs/structure_audit.hpp"
#include "mubs/verifier.hpp"
