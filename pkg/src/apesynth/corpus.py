"""Parallel corpus ingestion: TSV and Moses (two-file) layouts.

Malformed lines are skipped and reported, never fatal; the only fatal
conditions are a zero-pair corpus and mismatched Moses line counts.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyCorpus, LineCountMismatch, MissingFile

# len(tgt)/len(src) in characters outside this band is flagged as an outlier.
RATIO_LO = 1.0 / 9.0
RATIO_HI = 9.0


@dataclass(frozen=True)
class SentencePair:
    index: int
    src: str
    tgt: str


@dataclass(frozen=True)
class ParallelCorpus:
    pairs: tuple[SentencePair, ...]
    source_paths: tuple[str, ...]

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        for p in self.pairs:
            h.update(p.src.encode("utf-8"))
            h.update(b"\t")
            h.update(p.tgt.encode("utf-8"))
            h.update(b"\n")
        return h.hexdigest()


@dataclass
class ValidationReport:
    total_lines: int = 0
    empty_src_count: int = 0
    empty_tgt_count: int = 0
    dropped_indices: list[int] = field(default_factory=list)
    length_ratio_outliers: list[int] = field(default_factory=list)


def _read_lines(path: str | Path) -> list[str | None]:
    """Lines without trailing newline; None marks undecodable lines."""
    p = Path(path)
    if not p.exists():
        raise MissingFile(f"no such file: {p}")
    out: list[str | None] = []
    with open(p, "rb") as fh:
        for raw in fh:
            raw = raw.rstrip(b"\r\n")
            try:
                out.append(raw.decode("utf-8"))
            except UnicodeDecodeError:
                out.append(None)
    return out


def load_tsv(path: str | Path, report: ValidationReport | None = None) -> ParallelCorpus:
    """Load `<src>\\t<tgt>` pairs; only the first tab splits."""
    report = report if report is not None else ValidationReport()
    lines = _read_lines(path)
    report.total_lines = len(lines)
    pairs = []
    for i, line in enumerate(lines):
        if line is None or "\t" not in line:
            report.dropped_indices.append(i)
            continue
        src, _, tgt = line.partition("\t")
        if not src.strip():
            report.empty_src_count += 1
            report.dropped_indices.append(i)
            continue
        if not tgt.strip():
            report.empty_tgt_count += 1
            report.dropped_indices.append(i)
            continue
        pairs.append(SentencePair(i, src, tgt))
    if not pairs:
        raise EmptyCorpus(f"no valid pairs in {path}")
    return ParallelCorpus(tuple(pairs), (str(path),))


def load_moses(src_path: str | Path, tgt_path: str | Path,
               report: ValidationReport | None = None) -> ParallelCorpus:
    """Zip two line-aligned files positionally."""
    report = report if report is not None else ValidationReport()
    src_lines = _read_lines(src_path)
    tgt_lines = _read_lines(tgt_path)
    if len(src_lines) != len(tgt_lines):
        raise LineCountMismatch(
            f"{src_path} has {len(src_lines)} lines, {tgt_path} has {len(tgt_lines)}")
    report.total_lines = len(src_lines)
    pairs = []
    for i, (src, tgt) in enumerate(zip(src_lines, tgt_lines)):
        if src is None or tgt is None:
            report.dropped_indices.append(i)
            continue
        if not src.strip():
            report.empty_src_count += 1
            report.dropped_indices.append(i)
            continue
        if not tgt.strip():
            report.empty_tgt_count += 1
            report.dropped_indices.append(i)
            continue
        pairs.append(SentencePair(i, src, tgt))
    if not pairs:
        raise EmptyCorpus("no valid pairs after zipping")
    return ParallelCorpus(tuple(pairs), (str(src_path), str(tgt_path)))


def validate(corpus: ParallelCorpus) -> ValidationReport:
    """Pure post-load check; loaders already dropped empty-side lines."""
    report = ValidationReport(total_lines=corpus.pair_count)
    for pos, pair in enumerate(corpus.pairs):
        if not pair.src.strip():
            report.empty_src_count += 1
            report.dropped_indices.append(pos)
            continue
        if not pair.tgt.strip():
            report.empty_tgt_count += 1
            report.dropped_indices.append(pos)
            continue
        ratio = len(pair.tgt) / len(pair.src)
        if ratio < RATIO_LO or ratio > RATIO_HI:
            report.length_ratio_outliers.append(pos)
    return report


def drop_outliers(corpus: ParallelCorpus) -> ParallelCorpus:
    """Return a copy without length-ratio outlier pairs (opt-in via CLI)."""
    bad = set(validate(corpus).length_ratio_outliers)
    kept = tuple(p for i, p in enumerate(corpus.pairs) if i not in bad)
    if not kept:
        raise EmptyCorpus("all pairs were length-ratio outliers")
    return ParallelCorpus(kept, corpus.source_paths)
