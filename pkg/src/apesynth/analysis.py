"""Combined shallow analysis of one sentence: tokens, tags, chunks."""

from __future__ import annotations

from dataclasses import dataclass

from . import chunker, tagger
from .chunker import Chunk
from .tokenizer import Token, tokenize


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[Token, ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        assert len(self.tokens) == len(self.tags)

    @property
    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class ChunkedSentence:
    tagged: TaggedSentence
    chunks: tuple[Chunk, ...]
    bio: tuple[str, ...]


def tag_sentence(model: tagger.TaggerModel, line: str) -> TaggedSentence:
    tokens = tuple(tokenize(line))
    tags = tuple(tagger.tag(model, list(tokens)))
    return TaggedSentence(tokens, tags)


def chunk_sentence(tagged: TaggedSentence) -> ChunkedSentence:
    chunks = tuple(chunker.chunk_tags(list(tagged.tags)))
    bio = tuple(chunker.chunks_to_bio(list(chunks), len(tagged.tokens)))
    return ChunkedSentence(tagged, chunks, bio)
