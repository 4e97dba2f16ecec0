#!/usr/bin/env python3
# Copyright 2026 The Premise Forge Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates include/premise_forge/bundled_data.hpp from the files in data/.

Usage: python3 tools/gen_bundled_data.py [repo_root]
"""

import pathlib
import sys

FILES = [
    ("kLexiconTsv", "lexicon.tsv"),
    ("kStoplist", "stoplist.txt"),
    ("kAbstractionNouns", "abstraction_nouns.txt"),
    ("kColorTerms", "colors.txt"),
    ("kAnimateNouns", "animate.txt"),
    ("kExclusionLexicon", "exclusion_lexicon.txt"),
    ("kClassAliases", "aliases.txt"),
    ("kCocoClasses", "coco_classes.txt"),
]

HEADER = """// Copyright 2026 The Premise Forge Authors.
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

// Generated by tools/gen_bundled_data.py from data/. Do not edit.

#ifndef PREMISE_FORGE_BUNDLED_DATA_HPP
#define PREMISE_FORGE_BUNDLED_DATA_HPP

#include <string_view>

namespace pforge::bundled {
"""

FOOTER = """
}  // namespace pforge::bundled

#endif  // PREMISE_FORGE_BUNDLED_DATA_HPP
"""

# Raw string literals are capped by some compilers at ~64k characters, so
# long files are split into adjacent literals.
CHUNK = 12000


def literal(text):
    pieces = []
    while text:
        cut = min(len(text), CHUNK)
        if cut < len(text):
            cut = text.rfind("\n", 0, cut) + 1
        pieces.append('R"PFDATA(' + text[:cut] + ')PFDATA"')
        text = text[cut:]
    return "\n    ".join(pieces) if pieces else '""'


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    out = [HEADER]
    for name, fname in FILES:
        text = (root / "data" / fname).read_text(encoding="utf-8")
        out.append(f"\ninline constexpr std::string_view {name} =\n    {literal(text)};\n")
    out.append(FOOTER)
    (root / "include" / "premise_forge" / "bundled_data.hpp").write_text("".join(out), encoding="utf-8")


if __name__ == "__main__":
    main()
