"""Bag-of-words topic classifier built from CNOT adder circuits.

Training counts word/topic co-occurrences and stores them as rotation angles,
one small ``increment`` per occurrence. To score a phrase for a topic, every
in-vocabulary word qubit of that topic is rotated by its angle and CNOT-ed
into a topic scoring qubit; the topic whose scoring qubit is most likely to
read 1 wins.

Topics never share qubits, so each topic is simulated as its own small
circuit instead of one register of ``T * (W + 1)`` qubits.
"""

from __future__ import annotations

import json
import math
import re
import string
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gates import GeneratorKind
from .simulator import CNOT, MAX_QUBITS, Gate1, prob_one, run, sample_probability

MODEL_FORMAT = 1
TIE_TOL = 1e-12

_SPLIT = re.compile(r"[\s" + re.escape(string.punctuation) + r"]+")


class CorpusFormatError(ValueError):
    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.lineno = lineno


def tokenize(text: str) -> list[str]:
    """Lowercase and split on whitespace and ASCII punctuation."""
    return [t for t in _SPLIT.split(text.lower()) if t]


@dataclass
class Corpus:
    records: list[tuple[str, list[str]]]

    def __post_init__(self):
        if not self.records:
            raise ValueError("corpus has no records")

    @property
    def topics(self) -> list[str]:
        """Distinct topics in order of first appearance."""
        return list(dict.fromkeys(t for t, _ in self.records))

    @classmethod
    def from_pairs(cls, pairs) -> Corpus:
        return cls([(topic, tokenize(text)) for topic, text in pairs])


def read_corpus(path) -> Corpus:
    """Read ``topic<TAB>phrase`` lines; blank lines and ``#`` comments are skipped."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            topic, sep, phrase = line.partition("\t")
            if not sep or not topic.strip():
                raise CorpusFormatError(path, lineno, "expected 'topic<TAB>phrase'")
            records.append((topic.strip(), tokenize(phrase)))
    if not records:
        raise CorpusFormatError(path, 0, "no records")
    return Corpus(records)


def read_lambeq(path) -> Corpus:
    """Read lambeq dataset lines: a label, whitespace, then the sentence."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            parts = line.split(None, 1)
            if len(parts) != 2:
                raise CorpusFormatError(path, lineno, "expected 'label sentence'")
            records.append((parts[0], tokenize(parts[1])))
    if not records:
        raise CorpusFormatError(path, 0, "no records")
    return Corpus(records)


def read_vocabulary(path) -> list[str]:
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip() and not line.lstrip().startswith("#"):
                words.extend(tokenize(line))
    return list(dict.fromkeys(words))


def _topic_counts(corpus: Corpus, dedupe: bool = True) -> tuple[list[str], dict[str, Counter]]:
    topics = corpus.topics
    counts: dict[str, Counter] = {}
    for topic, words in corpus.records:
        for w in (dict.fromkeys(words) if dedupe else words):
            counts.setdefault(w, Counter())[topic] += 1
    return topics, counts


def salience(corpus: Corpus) -> dict[str, float]:
    """Largest deviation of a word's per-topic phrase count from its mean count."""
    topics, counts = _topic_counts(corpus)
    out = {}
    for w, c in counts.items():
        row = [c[t] for t in topics]
        mean = sum(row) / len(row)
        out[w] = max(abs(x - mean) for x in row)
    return out


def build_vocabulary(corpus: Corpus, size: int) -> list[str]:
    """The ``size`` most salient words, ties broken alphabetically.

    Words spread evenly over the topics (salience 0) carry no evidence and are
    left out, so the result can be shorter than ``size``.
    """
    if size < 1:
        raise ValueError("vocabulary size must be positive")
    if len(corpus.topics) < 2:
        raise ValueError("salience needs at least two topics")
    sal = salience(corpus)
    return sorted((w for w in sal if sal[w] > 0), key=lambda w: (-sal[w], w))[:size]


@dataclass(eq=False)
class ClassifierModel:
    topics: list[str]
    vocabulary: list[str]
    angles: np.ndarray  # shape (len(vocabulary), len(topics)), radians
    increment: float
    generator: GeneratorKind = field(default_factory=lambda: GeneratorKind("x"))

    def __post_init__(self):
        self.angles = np.asarray(self.angles, dtype=float).reshape(len(self.vocabulary), len(self.topics))
        if np.any(self.angles < 0):
            raise ValueError("angles must be nonnegative")
        self._word_index = {w: i for i, w in enumerate(self.vocabulary)}

    def angle(self, word: str, topic: str) -> float:
        return float(self.angles[self._word_index[word], self.topics.index(topic)])

    def to_json(self) -> str:
        doc = {
            "format": MODEL_FORMAT,
            "topics": self.topics,
            "vocabulary": self.vocabulary,
            "increment_radians": self.increment,
            "generator": self.generator.to_dict(),
            "angles": self.angles.tolist(),
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ClassifierModel:
        doc = json.loads(text)
        if doc.get("format") != MODEL_FORMAT:
            raise ValueError(f"unsupported model format {doc.get('format')!r}")
        angles = doc["angles"]
        return cls(
            topics=list(doc["topics"]),
            vocabulary=list(doc["vocabulary"]),
            angles=np.array(angles, dtype=float) if angles else np.zeros((0, len(doc["topics"]))),
            increment=float(doc["increment_radians"]),
            generator=GeneratorKind.from_dict(doc["generator"]),
        )

    def save(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path) -> ClassifierModel:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def train(corpus: Corpus, increment: float, vocab, generator: GeneratorKind | None = None,
          dedupe: bool = True) -> ClassifierModel:
    """Accumulate ``increment`` per (word, topic) occurrence.

    With ``dedupe`` a word counts once per phrase, otherwise once per
    occurrence.
    """
    if not increment > 0:
        raise ValueError("increment must be positive")
    vocab = list(dict.fromkeys(vocab))
    topics = corpus.topics
    row = {w: i for i, w in enumerate(vocab)}
    angles = np.zeros((len(vocab), len(topics)))
    for topic, words in corpus.records:
        col = topics.index(topic)
        for w in (dict.fromkeys(words) if dedupe else words):
            if w in row:
                angles[row[w], col] += 1
    return ClassifierModel(topics, vocab, angles * increment, float(increment),
                           generator or GeneratorKind("x"))


def phrase_words(model: ClassifierModel, phrase, dedupe: bool = True) -> list[str]:
    """In-vocabulary words of ``phrase``, in order, deduplicated if asked."""
    words = tokenize(phrase) if isinstance(phrase, str) else [w.lower() for w in phrase]
    words = [w for w in words if w in model._word_index]
    return list(dict.fromkeys(words)) if dedupe else words


def topic_circuit(model: ClassifierModel, phrase, topic: str, dedupe: bool = True):
    """Scoring circuit for one topic: ``(ops, n_qubits)``, scoring qubit last.

    One qubit per distinct word; a repeated word (with ``dedupe`` off) adds
    another CNOT from the same qubit.
    """
    words = phrase_words(model, phrase, dedupe)
    distinct = list(dict.fromkeys(words))
    if len(distinct) >= MAX_QUBITS:
        raise ValueError(f"phrase has too many vocabulary words ({len(distinct)})")
    n = len(distinct) + 1
    ops = [Gate1(model.generator.rotation(model.angle(w, topic)), q) for q, w in enumerate(distinct)]
    ops += [CNOT(distinct.index(w), n - 1) for w in words]
    return ops, n


def score_topic(model: ClassifierModel, phrase, topic: str, dedupe: bool = True) -> float:
    if topic not in model.topics:
        raise ValueError(f"unknown topic {topic!r}")
    ops, n = topic_circuit(model, phrase, topic, dedupe)
    return prob_one(run(ops, n), n - 1)


def full_circuit(model: ClassifierModel, phrase, dedupe: bool = True):
    """The unfactorised register: word qubit ``(t, w)`` at ``t*W + w``, scorer of ``t`` at ``T*W + t``."""
    n_t, n_w = len(model.topics), len(model.vocabulary)
    n = n_t * (n_w + 1)
    ops = []
    for t, topic in enumerate(model.topics):
        for w, word in enumerate(model.vocabulary):
            ops.append(Gate1(model.generator.rotation(model.angle(word, topic)), t * n_w + w))
    for word in phrase_words(model, phrase, dedupe):
        w = model._word_index[word]
        for t in range(n_t):
            ops.append(CNOT(t * n_w + w, n_t * n_w + t))
    return ops, n


@dataclass(frozen=True)
class Sampled:
    shots: int
    seed: int


@dataclass(frozen=True)
class ClassificationResult:
    scores: dict[str, float]
    topic: str
    tie: bool
    mode: str | Sampled = "analytic"


def classify(model: ClassifierModel, phrase, mode: str | Sampled = "analytic",
             dedupe: bool = True) -> ClassificationResult:
    """Score every topic and pick the best; ties go to the first topic in model order.

    In sampled mode topic ``j`` is measured with seed ``mode.seed + j``.
    """
    scores = {}
    for j, topic in enumerate(model.topics):
        p = score_topic(model, phrase, topic, dedupe)
        if isinstance(mode, Sampled):
            p = sample_probability(p, mode.shots, mode.seed + j).frequency("1")
        elif mode != "analytic":
            raise ValueError(f"unknown mode {mode!r}")
        scores[topic] = p
    best = max(scores.values())
    leaders = [t for t in model.topics if best - scores[t] <= TIE_TOL]
    return ClassificationResult(scores, leaders[0], len(leaders) > 1, mode)


@dataclass(frozen=True)
class Evaluation:
    accuracy: float
    records: list[tuple[str, ClassificationResult]]

    @property
    def ties(self) -> int:
        return sum(r.tie for _, r in self.records)

    def report(self, precision: int = 12) -> str:
        lines = []
        for expected, r in self.records:
            scores = ",".join(f"{r.scores[t]:.{precision}g}" for t in r.scores)
            lines.append(f"{expected}\t{r.topic}\t{scores}")
        lines.append(f"accuracy={self.accuracy:.{precision}g}")
        return "\n".join(lines) + "\n"


def evaluate(model: ClassifierModel, test: Corpus, mode: str | Sampled = "analytic",
             dedupe: bool = True) -> Evaluation:
    results = [(topic, classify(model, words, mode, dedupe)) for topic, words in test.records]
    hits = sum(expected == r.topic for expected, r in results)
    return Evaluation(hits / len(results), results)

