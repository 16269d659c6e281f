// Copyright (c) 2026 mtts Authors
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

#include "mtts/pinyin.h"
#include "syllable_table_data.h"

namespace mtts {

const SyllableTable& SyllableTable::builtin() {
  static const SyllableTable table = SyllableTable::parse(detail::kSyllableTableTsv);
  return table;
}

}  // namespace mtts
