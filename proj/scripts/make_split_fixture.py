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
"""Computes per-split reference correlations for a synthetic study with scipy.

Usage:
  blanc synth-annotations --annotations ann.csv --scores scores.jsonl
  make_split_fixture.py ann.csv scores.jsonl tests/data/planted_noise_splits.csv
"""

import csv
import itertools
import json
import sys
from collections import defaultdict

from scipy import stats


def main():
    ann_path, scores_path, out_path = sys.argv[1:4]
    quality = "overall"
    ratings = defaultdict(dict)
    with open(ann_path, newline="") as f:
        rows = (line for line in f if not line.startswith("#"))
        for row in csv.DictReader(rows):
            if row["quality"] == quality:
                ratings[row["pair_id"]][row["annotator_id"]] = int(row["score"])
    scores = {}
    with open(scores_path) as f:
        for line in f:
            record = json.loads(line)
            scores[record["id"]] = record["score"]

    pairs = sorted(ratings)
    annotators = sorted({a for r in ratings.values() for a in r})
    with open(out_path, "w", newline="") as f:
        f.write("# scipy %s, quality=%s\n" % (
            __import__("scipy").__version__, quality))
        writer = csv.writer(f, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(["split_id", "members", "human_human_rho",
                         "human_human_p", "blanc_human_rho", "blanc_human_p"])
        for split_id, small in enumerate(itertools.combinations(annotators, 3)):
            large = [a for a in annotators if a not in small]
            small_means, large_means, auto = [], [], []
            for p in pairs:
                s = [ratings[p][a] for a in small if a in ratings[p]]
                l = [ratings[p][a] for a in large if a in ratings[p]]
                if not s or not l:
                    continue
                small_means.append(sum(s) / len(s))
                large_means.append(sum(l) / len(l))
                auto.append(scores[p])
            hh = stats.spearmanr(small_means, large_means)
            bh = stats.spearmanr(auto, large_means)
            writer.writerow([split_id, ";".join(small), repr(float(hh[0])),
                             repr(float(hh[1])), repr(float(bh[0])),
                             repr(float(bh[1]))])


if __name__ == "__main__":
    main()
