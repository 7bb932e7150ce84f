#!/usr/bin/env python3
# Copyright 2026 The BLANC-cpp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes data/common_words.txt: frequent lowercase English words.

The entity extractor uses the list to decide whether a capitalized word at
the start of a sentence is an ordinary word or a name.

Usage: make_common_words.py data/common_words.txt [count]
"""

import sys

from wordfreq import top_n_list


def main():
    out_path = sys.argv[1]
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 30000
    words = sorted({w for w in top_n_list("en", count)
                    if w.isascii() and w.isalpha()})
    with open(out_path, "w") as f:
        f.write("# Frequent English words (wordfreq top %d), one per line.\n"
                % count)
        for w in words:
            f.write(w + "\n")
    print(f"wrote {len(words)} words to {out_path}")


if __name__ == "__main__":
    main()
