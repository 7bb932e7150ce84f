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
"""Regenerates the checked-in vocabulary data and the small test bundle.

Writes:
  data/reference/{vocab.txt,tokenizer.json,unigram.txt}
  tests/data/tiny_bundle/{model.onnx,vocab.txt,tokenizer.json,selftest.json}

The expected token ids and top-1 predictions in selftest.json come from the
HuggingFace tokenizer and the PyTorch model, not from this project's code.

Requires: torch, transformers, onnx, onnxruntime, wordfreq.
"""

import json
import os
import random
import re
import string

import numpy as np
import onnxruntime as ort
import torch
import transformers
import wordfreq

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
MAX_LEN = 128
SEED = 20240607

SPECIALS = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]
SUFFIXES = ["s", "es", "ed", "ing", "ly", "er", "ers", "est", "ion", "ions",
            "al", "ment", "ness", "ity", "able", "ful", "less", "ous", "ive",
            "ist", "ize", "ic", "an", "ian", "son", "ton", "berg", "ia", "en",
            "in", "on", "ar", "or", "el", "et", "a", "o", "i", "y"]


def build_vocab():
    tokens = list(SPECIALS)
    tokens += [c for c in string.punctuation]
    tokens += list(string.digits) + list(string.ascii_lowercase)
    tokens += ["##" + c for c in string.digits + string.ascii_lowercase]
    tokens += ["##" + s for s in SUFFIXES if "##" + s not in tokens]
    words = [w for w in wordfreq.top_n_list("en", 6000)
             if re.fullmatch(r"[a-z]+", w) and len(w) > 1]
    for w in words[:3000]:
        if w not in tokens:
            tokens.append(w)
    return tokens


def unigram_counts(tokens):
    counts = []
    for tok in tokens:
        if tok in SPECIALS:
            counts.append(0)
        elif tok in (".", ","):
            counts.append(50_000_000)
        elif tok.startswith("##") or len(tok) == 1:
            counts.append(1000)
        else:
            counts.append(int(round(wordfreq.word_frequency(tok, "en") * 1e9)) + 1)
    return counts


def tokenizer_config(tokens, source):
    return {
        "format_version": 1,
        "source_model": source,
        "lowercase": True,
        "max_len": MAX_LEN,
        "continuation_prefix": "##",
        "special_tokens": {
            "pad": tokens.index("[PAD]"),
            "unk": tokens.index("[UNK]"),
            "cls": tokens.index("[CLS]"),
            "sep": tokens.index("[SEP]"),
            "mask": tokens.index("[MASK]"),
            "filler": tokens.index("."),
        },
    }


def write_lines(path, lines):
    with open(path, "w", encoding="utf-8") as f:
        for line in lines:
            f.write(f"{line}\n")


def corpus_sentences():
    sentences = []
    with open(os.path.join(ROOT, "tests/data/desk_corpus.jsonl"), encoding="utf-8") as f:
        for line in f:
            rec = json.loads(line)
            for text in (rec["document"], rec["summary"]):
                sentences += [s for s in re.split(r"(?<=[.!?])\s+", text) if s]
    return sentences


EXTRA_TOKENIZER_SENTENCES = [
    "Café owners in Zürich said the crème brûlée was naïve \u2014 “really” naïve…",
    "The résumé listed 3.5 years at the São Paulo office (2019\u20132022).",
    "北京 hosted talks; the delegates met at 9:30am!",
    "An extraordinarilylongwordthatnobodyhaseverseenbefore appears here.",
    "Tabs\tand\nnewlines   are   whitespace, aren't they?",
    "E-mail me at someone@example.com or visit www.example.org/path?x=1.",
]


def train_tiny_model(tokenizer, vocab_size, sentences):
    cfg = transformers.BertConfig(
        vocab_size=vocab_size, hidden_size=48, num_hidden_layers=2,
        num_attention_heads=2, intermediate_size=96,
        max_position_embeddings=MAX_LEN, type_vocab_size=1)
    torch.manual_seed(SEED)
    model = transformers.BertForMaskedLM(cfg)
    opt = torch.optim.AdamW(model.parameters(), lr=3e-3)
    rng = random.Random(SEED)
    encoded = [tokenizer(s, truncation=True, max_length=MAX_LEN)["input_ids"]
               for s in sentences]
    mask_id = tokenizer.mask_token_id
    model.train()
    for step in range(400):
        batch = rng.sample(encoded, 16)
        width = max(len(e) for e in batch)
        ids = torch.zeros((len(batch), width), dtype=torch.long)
        att = torch.zeros_like(ids)
        labels = torch.full_like(ids, -100)
        for r, e in enumerate(batch):
            ids[r, :len(e)] = torch.tensor(e)
            att[r, :len(e)] = 1
            for c in range(1, len(e) - 1):
                if rng.random() < 0.2:
                    labels[r, c] = e[c]
                    ids[r, c] = mask_id
        loss = model(input_ids=ids, attention_mask=att, labels=labels).loss
        opt.zero_grad()
        loss.backward()
        opt.step()
    model.eval()
    return model


def main():
    tokens = build_vocab()

    ref_dir = os.path.join(ROOT, "data/reference")
    os.makedirs(ref_dir, exist_ok=True)
    write_lines(os.path.join(ref_dir, "vocab.txt"), tokens)
    write_lines(os.path.join(ref_dir, "unigram.txt"), unigram_counts(tokens))
    with open(os.path.join(ref_dir, "tokenizer.json"), "w") as f:
        json.dump(tokenizer_config(tokens, "reference-unigram"), f, indent=2)
        f.write("\n")

    bundle = os.path.join(ROOT, "tests/data/tiny_bundle")
    os.makedirs(bundle, exist_ok=True)
    vocab_path = os.path.join(bundle, "vocab.txt")
    write_lines(vocab_path, tokens)
    with open(os.path.join(bundle, "tokenizer.json"), "w") as f:
        json.dump(tokenizer_config(tokens, "tiny-bert-test"), f, indent=2)
        f.write("\n")

    hf_tok = transformers.BertTokenizer(vocab_path, do_lower_case=True)
    sentences = corpus_sentences()
    model = train_tiny_model(hf_tok, len(tokens), sentences)

    onnx_path = os.path.join(bundle, "model.onnx")
    dummy = torch.tensor([hf_tok("hello world")["input_ids"]])
    torch.onnx.export(
        model, (dummy, torch.ones_like(dummy)), onnx_path,
        input_names=["input_ids", "attention_mask"], output_names=["logits"],
        dynamic_axes={"input_ids": {0: "batch", 1: "seq"},
                      "attention_mask": {0: "batch", 1: "seq"},
                      "logits": {0: "batch", 1: "seq"}},
        opset_version=14, dynamo=False)

    tokenization = []
    for text in (sentences + EXTRA_TOKENIZER_SENTENCES)[:100] + EXTRA_TOKENIZER_SENTENCES:
        ids = hf_tok(text, add_special_tokens=False)["input_ids"]
        tokenization.append({"text": text, "ids": ids})

    predictions = []
    rng = random.Random(SEED + 1)
    total = 0
    for text in sentences[:20]:
        ids = hf_tok(text, truncation=True, max_length=MAX_LEN)["input_ids"]
        positions = [p for p in range(1, len(ids) - 1) if p % 4 == rng.randrange(4)]
        if not positions:
            continue
        masked = list(ids)
        for p in positions:
            masked[p] = hf_tok.mask_token_id
        with torch.no_grad():
            logits = model(input_ids=torch.tensor([masked])).logits[0]
        top = [int(logits[p].argmax()) for p in positions]
        predictions.append({"input_ids": masked, "masked_positions": positions,
                            "expected_top_ids": top})
        total += len(positions)
    assert total >= 50, total

    sess = ort.InferenceSession(onnx_path)
    agree = 0
    for case in predictions:
        ids = np.array([case["input_ids"]], dtype=np.int64)
        out = sess.run(None, {"input_ids": ids, "attention_mask": np.ones_like(ids)})[0][0]
        agree += sum(int(out[p].argmax()) == t
                     for p, t in zip(case["masked_positions"], case["expected_top_ids"]))
    assert agree >= 0.98 * total, (agree, total)

    with open(os.path.join(bundle, "selftest.json"), "w") as f:
        json.dump({"format_version": 1, "predictions": predictions,
                   "tokenization": tokenization}, f)
        f.write("\n")
    print(f"vocab={len(tokens)} selftest_positions={total} onnx_agreement={agree}/{total}")


if __name__ == "__main__":
    main()
