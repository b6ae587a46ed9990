// Copyright 2026 The ArchOnto Migration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARCHONTO_ARCHONTO_HPP_
#define ARCHONTO_ARCHONTO_HPP_

#include "archonto/datetime.hpp"
#include "archonto/error.hpp"
#include "archonto/graph.hpp"
#include "archonto/isad.hpp"
#include "archonto/mdl.hpp"
#include "archonto/migration.hpp"
#include "archonto/schema.hpp"
#include "archonto/stats.hpp"
#include "archonto/text.hpp"
#include "archonto/validation.hpp"
#include "archonto/vocabulary.hpp"

#endif  // ARCHONTO_ARCHONTO_HPP_
