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
"""Writes scipy reference values for the correlation tests.

Usage: make_correlation_fixtures.py tests/data/correlation_fixtures.json
"""

import json
import sys

import numpy as np
from scipy import stats


def make_case(rng, n, kind):
    x = rng.normal(size=n)
    y = 0.4 * x + rng.normal(size=n)
    if kind == "ties":
        x = np.round(x * 2) / 2
        y = np.round(y * 2) / 2
    elif kind == "ratings":
        x = np.clip(np.round(x + 2), 0, 4)
        y = np.clip(np.round(y + 2), 0, 4)
    elif kind == "strong":
        y = x + 0.05 * rng.normal(size=n)
    elif kind == "negative":
        y = -y
    return x, y


def main():
    out_path = sys.argv[1]
    rng = np.random.default_rng(20260101)
    cases = []
    lengths = [5, 6, 7, 10, 15, 20, 30, 50, 80, 100, 150, 200, 250, 300]
    kinds = ["plain", "ties", "ratings", "strong", "negative"]
    for n in lengths:
        for kind in kinds:
            x, y = make_case(rng, n, kind)
            if np.ptp(x) == 0 or np.ptp(y) == 0:
                continue
            pr = stats.pearsonr(x, y)
            sr = stats.spearmanr(x, y)
            cases.append({
                "name": f"{kind}_{n}",
                "x": [float(v) for v in x],
                "y": [float(v) for v in y],
                "pearson_r": float(pr[0]),
                "pearson_p": float(pr[1]),
                "spearman_rho": float(sr[0]),
                "spearman_p": float(sr[1]),
                "ranks_x": [float(v) for v in stats.rankdata(x)],
            })
    with open(out_path, "w") as f:
        json.dump({"generator": "scipy " + __import__("scipy").__version__,
                   "cases": cases}, f, indent=1)
        f.write("\n")
    print(f"wrote {len(cases)} cases to {out_path}")


if __name__ == "__main__":
    main()
