"""Boolean predicates over ring classifiers, as used by ``ringlab scan``.

Grammar (``!`` binds tighter than ``&``, which binds tighter than ``|``)::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | NAME
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field

from .classify import RingReport, classify_ring
from .corpus import Corpus, corpus_modules
from .errors import EnumerationCutoffExceeded, ParseError, SizeCutoffExceeded
from .limits import use_limits

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")

VERDICT_NAMES = ("cohereditary", "cohereditary_hull", "stable", "goldie_leq_cg", "xi", "chi", "proper")
CLASSIFIER_NAMES = (
    "semisimple", "local", "division", "commutative", "qf", "qf_op", "v_ring", "kasch", "small_ring",
    "almost_small", "perp_torsion", "teply", "soc_lr", "soc_rl", "splits", "regular_in_primitive",
)
NAMES = CLASSIFIER_NAMES + VERDICT_NAMES


def _tokens(text: str) -> list[str]:
    out = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            out.append(m.group(1))
        elif m.group(2) and not m.group(2).isspace():
            out.append(m.group(2))
    return out


def parse_predicate(text: str):
    """Compile ``text`` into a function ``values: dict -> bool``."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"predicate {text!r}: expected {expected or 'a term'} at token {pos}")
        pos += 1
        return tok

    def expr():
        parts = [term()]
        while peek() == "|":
            take("|")
            parts.append(term())
        return parts[0] if len(parts) == 1 else lambda v, ps=parts: any(p(v) for p in ps)

    def term():
        parts = [factor()]
        while peek() == "&":
            take("&")
            parts.append(factor())
        return parts[0] if len(parts) == 1 else lambda v, ps=parts: all(p(v) for p in ps)

    def factor():
        tok = peek()
        if tok == "!":
            take("!")
            inner = factor()
            return lambda v: not inner(v)
        if tok == "(":
            take("(")
            inner = expr()
            take(")")
            return inner
        name = take()
        if name not in NAMES:
            raise ParseError(f"predicate {text!r}: unknown classifier {name!r}; known: {', '.join(NAMES)}")
        return lambda v: bool(v[name])

    if not toks:
        raise ParseError("empty predicate")
    fn = expr()
    if pos != len(toks):
        raise ParseError(f"predicate {text!r}: unexpected {toks[pos]!r}")
    return fn


def predicate_values(report: RingReport) -> dict:
    v = report.verdict
    values = {k: report.classifiers[k] for k in CLASSIFIER_NAMES}
    values.update({
        "cohereditary": v.cohereditary,
        "cohereditary_hull": v.cohereditary_hull,
        "stable": v.stable,
        "goldie_leq_cg": v.goldie_leq_cg,
        "xi": v.kind == "xi",
        "chi": v.kind == "chi",
        "proper": v.kind == "proper",
    })
    return values


@dataclass
class ScanResult:
    predicate: str
    hits: list[str] = field(default_factory=list)
    values: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 3 if self.skipped else 0

    def to_json(self) -> dict:
        return {
            "predicate": self.predicate,
            "hits": self.hits,
            "rings": self.values,
            "skipped": self.skipped,
            "scope": "corpus-extensional",
        }


def scan(corpus: Corpus, text: str, progress=None) -> ScanResult:
    fn = parse_predicate(text)
    result = ScanResult(text)
    with use_limits(corpus.limits):
        for name, ring in corpus.rings:
            start = time.perf_counter()
            try:
                report = classify_ring(ring, corpus_modules(ring))
            except (SizeCutoffExceeded, EnumerationCutoffExceeded) as exc:
                result.skipped[name] = str(exc)
            else:
                values = predicate_values(report)
                result.values[name] = values
                if fn(values):
                    result.hits.append(name)
            result.timing[name] = time.perf_counter() - start
            if progress is not None:
                progress(name, result)
    return result
