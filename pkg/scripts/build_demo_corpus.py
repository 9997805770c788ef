#!/usr/bin/env python3
"""Build the bundled demo parallel corpus (1,000 pairs, English target).

Target sentences come from the npm `nlp-corpus` sentence collection.  The
source side is a deterministic mock-foreign rendering of the target (each
word reversed, casing kept); the pipeline never analyzes the source side,
so any opaque text works for demos and tests.

Usage: build_demo_corpus.py <nlp-corpus-builds-dir> <out.tsv> [n]
"""

import json
import sys
from pathlib import Path


def mock_source(line: str) -> str:
    out = []
    for word in line.split():
        core = word.strip(".,;:!?\"()[]")
        rev = core[::-1].lower()
        if core[:1].isupper():
            rev = rev[:1].upper() + rev[1:]
        out.append(word.replace(core, rev) if core else word)
    return " ".join(out)


def main():
    builds = Path(sys.argv[1])
    out = Path(sys.argv[2])
    n = int(sys.argv[3]) if len(sys.argv) > 3 else 1000
    picked = []
    for f in sorted(builds.glob("doc-*.json")):
        doc = json.loads(f.read_text())
        sentences = doc if isinstance(doc, list) else [doc[k] for k in sorted(doc, key=int)]
        for s in sentences:
            if not isinstance(s, str):
                continue
            if not (30 <= len(s) <= 180):
                continue
            if not all(0x20 <= ord(c) < 0x7F for c in s):
                continue
            if "\t" in s:
                continue
            picked.append(s)
            if len(picked) >= n:
                break
        if len(picked) >= n:
            break
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for s in picked:
            fh.write(f"{mock_source(s)}\t{s}\n")
    print(f"wrote {len(picked)} pairs to {out}")


if __name__ == "__main__":
    main()
