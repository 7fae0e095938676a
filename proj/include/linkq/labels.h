// Copyright 2026 The LinkQ Authors.
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

#ifndef LINKQ_LABELS_H_
#define LINKQ_LABELS_H_

#include <map>
#include <string>

namespace linkq {

// Human-readable KG context for one Q/P identifier.
struct EntityLabel {
  std::string label;
  std::string description;
  // The KG has no record of this id.
  bool missing = false;

  friend bool operator==(const EntityLabel&, const EntityLabel&) = default;
};

// Keyed by bare identifier text ("Q312", "P112").
using LabelMap = std::map<std::string, EntityLabel>;

}  // namespace linkq

#endif  // LINKQ_LABELS_H_
