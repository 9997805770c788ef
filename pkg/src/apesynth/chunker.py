"""Rule-based phrase chunker over Penn tags, emitting BIO labels.

The grammar is fixed and versioned:

    NP:   (DT|PRP$)? (JJ|JJR|JJS)* (NN|NNS|NNP|NNPS)+  |  PRP
    VP:   (MD)? (RB)? (VB|VBD|VBG|VBN|VBP|VBZ)+
    PP:   IN
    ADJP: (RB)? (JJ|JJR|JJS)+        (when not consumed by an NP)
    ADVP: (RB|RBR|RBS)+              (when not consumed above)

Matching is longest-match, left-to-right; at each position the longest
matching rule wins, ties broken by the order above.  Everything else is O.
"""

from __future__ import annotations

from dataclasses import dataclass

CHUNK_LABELS = ("NP", "VP", "PP", "ADJP", "ADVP")
GRAMMAR_VERSION = "1"

_ADJ = {"JJ", "JJR", "JJS"}
_NOUN = {"NN", "NNS", "NNP", "NNPS"}
_VERB = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
_ADV = {"RB", "RBR", "RBS"}


@dataclass(frozen=True)
class Chunk:
    label: str
    start: int
    end: int


def _match_np(tags, i):
    j = i
    if j < len(tags) and tags[j] == "PRP":
        return j + 1 - i
    if j < len(tags) and tags[j] in ("DT", "PRP$"):
        j += 1
    while j < len(tags) and tags[j] in _ADJ:
        j += 1
    k = j
    while k < len(tags) and tags[k] in _NOUN:
        k += 1
    if k == j:  # needs at least one noun
        return 0
    return k - i


def _match_vp(tags, i):
    j = i
    if j < len(tags) and tags[j] == "MD":
        j += 1
    if j < len(tags) and tags[j] == "RB":
        j += 1
    k = j
    while k < len(tags) and tags[k] in _VERB:
        k += 1
    if k == j:
        return 0
    return k - i


def _match_pp(tags, i):
    return 1 if tags[i] == "IN" else 0


def _match_adjp(tags, i):
    j = i
    if j < len(tags) and tags[j] == "RB":
        j += 1
    k = j
    while k < len(tags) and tags[k] in _ADJ:
        k += 1
    if k == j:
        return 0
    return k - i


def _match_advp(tags, i):
    k = i
    while k < len(tags) and tags[k] in _ADV:
        k += 1
    return k - i


_RULES = (
    ("NP", _match_np),
    ("VP", _match_vp),
    ("PP", _match_pp),
    ("ADJP", _match_adjp),
    ("ADVP", _match_advp),
)


def chunk_tags(tags: list[str]) -> list[Chunk]:
    """Non-overlapping, sorted chunks over a tag sequence."""
    chunks: list[Chunk] = []
    i = 0
    n = len(tags)
    while i < n:
        best_label, best_len = None, 0
        for label, matcher in _RULES:
            length = matcher(tags, i)
            if length > best_len:
                best_label, best_len = label, length
        if best_label is None:
            i += 1
            continue
        chunks.append(Chunk(best_label, i, i + best_len))
        i += best_len
    return chunks


def chunks_to_bio(chunks: list[Chunk], n_tokens: int) -> list[str]:
    bio = ["O"] * n_tokens
    for c in chunks:
        bio[c.start] = "B-" + c.label
        for i in range(c.start + 1, c.end):
            bio[i] = "I-" + c.label
    return bio


def bio_to_chunks(bio: list[str]) -> list[Chunk]:
    chunks: list[Chunk] = []
    start = None
    label = None
    for i, tag in enumerate(bio):
        if tag.startswith("B-"):
            if start is not None:
                chunks.append(Chunk(label, start, i))
            start, label = i, tag[2:]
        elif tag.startswith("I-"):
            pass  # continuation; well-formedness checked separately
        else:
            if start is not None:
                chunks.append(Chunk(label, start, i))
                start = None
    if start is not None:
        chunks.append(Chunk(label, start, len(bio)))
    return chunks


def bio_is_wellformed(bio: list[str]) -> bool:
    """True iff every I-X directly follows B-X or I-X with the same X."""
    prev = "O"
    for tag in bio:
        if tag.startswith("I-"):
            if prev == "O" or prev[2:] != tag[2:]:
                return False
        elif not (tag == "O" or tag.startswith("B-")):
            return False
        prev = tag
    return True
