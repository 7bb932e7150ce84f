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
"""BLANC summary-quality scoring.

Example:
    import blanc
    model = blanc.load_backend()            # built-in reference backend
    blanc.score_pair(model, document, summary, gap=6)
"""

import os as _os

_packaged_data = _os.path.join(_os.path.dirname(__file__), "data")
if _os.path.isdir(_packaged_data):
    _os.environ.setdefault("BLANC_DATA_DIR", _packaged_data)

from ._core import (  # noqa: E402
    BlancError,
    Model,
    enumerate_splits,
    extract_entities,
    load_backend,
    pearson,
    run_cli,
    score_batch,
    score_pair,
    spearman,
    split_sentences,
)

__all__ = [
    "BlancError",
    "Model",
    "enumerate_splits",
    "extract_entities",
    "load_backend",
    "pearson",
    "run_cli",
    "score_batch",
    "score_pair",
    "spearman",
    "split_sentences",
]
