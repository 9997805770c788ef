#!/usr/bin/env python3
"""Build the bundled CoNLL tagged corpus.

Aligns the npm `penn-treebank-sample` WSJ sentences (word tags only, no
punctuation/contraction tags) with our tokenizer, restoring punctuation tags
literally and contraction-piece tags heuristically.  Sentences that do not
align cleanly are dropped.  Optionally appends extra silver-tagged sentences
(CoNLL on stdin of scripts/tag_with_wink.js) to reach a target size.

Usage:
  build_tagged_corpus.py penn-data.json out.conll [extra.conll ...]
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from apesynth.tagset import PENN_TAGS, punct_tag
from apesynth.tokenizer import tokenize

CONTRACTION_TAGS = {
    "n't": "RB", "'ll": "MD", "'re": "VBP", "'ve": "VBP", "'m": "VBP", "'d": "MD",
}


def align(sentence: str, tags: list[str]):
    try:
        toks = tokenize(sentence)
    except Exception:
        return None
    it = iter(tags)
    out = []
    last_word_tag = ""
    for t in toks:
        s = t.surface
        low = s.lower()
        p = punct_tag(s)
        if p is not None:
            out.append((s, p))
            continue
        if low in CONTRACTION_TAGS:
            out.append((s, CONTRACTION_TAGS[low]))
            continue
        if low == "'s":
            out.append((s, "POS" if last_word_tag.startswith("NN") else "VBZ"))
            continue
        gold = next(it, None)
        if gold is None or gold not in PENN_TAGS:
            return None
        out.append((s, gold))
        last_word_tag = gold
    if next(it, None) is not None:
        return None
    return out


def main():
    penn_path, out_path = sys.argv[1], sys.argv[2]
    extras = sys.argv[3:]
    data = json.loads(Path(penn_path).read_text())
    kept = 0
    with open(out_path, "w", encoding="utf-8") as fh:
        for sentence, tags in data:
            aligned = align(sentence, tags)
            if aligned is None:
                continue
            kept += 1
            for word, t in aligned:
                fh.write(f"{word}\t{t}\n")
            fh.write("\n")
        for extra in extras:
            for line in Path(extra).read_text(encoding="utf-8").splitlines():
                fh.write(line + "\n")
    print(f"kept {kept}/{len(data)} treebank sentences; extras: {extras}")


if __name__ == "__main__":
    main()
