"""Exact-rational JSON encoding of tensors and reports.

All numbers travel as decimal-free "num/den" strings, so serialization
round-trips bit-exactly.  Entry lists are sorted on basis labels and
exponents, which makes the output byte-stable across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import LbforgeError, MalformedInputError
from .liealg import LieAlgebraData, build_sl
from .pairing import DoubleElement
from .ratfun import BivarRat
from .rmatrix import SpectralTensor2
from .sparse import Sparse


def frac_str(x) -> str:
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"bad rational {s!r}") from exc


def algebra_doc(alg: LieAlgebraData) -> dict:
    return {"type": "A", "rank": alg.n}


def algebra_from_doc(doc) -> LieAlgebraData:
    try:
        if doc["type"] != "A":
            raise MalformedInputError(f"unsupported algebra type {doc['type']!r}")
        return build_sl(int(doc["rank"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError("bad algebra record") from exc


def tensor_to_doc(alg: LieAlgebraData, r: SpectralTensor2) -> dict:
    entries = []
    for (i, j) in sorted(r.entries):
        val = r.entries[(i, j)]
        num = [
            [a, b, frac_str(c)]
            for (a, b), c in sorted(val.num.items())
        ]
        entries.append(
            {
                "i": alg.basis[i],
                "j": alg.basis[j],
                "num": num,
                "den_power": val.den_pow,
                "den_scale": "1",
            }
        )
    return {"algebra": algebra_doc(alg), "basis": list(alg.basis), "entries": entries}


def tensor_from_doc(doc):
    """Returns (algebra, SpectralTensor2); raises MalformedInputError."""
    try:
        alg = algebra_from_doc(doc["algebra"])
        if list(doc["basis"]) != list(alg.basis):
            raise MalformedInputError("basis labels do not match the algebra")
        index = {label: k for k, label in enumerate(alg.basis)}
        r = SpectralTensor2()
        for entry in doc["entries"]:
            i = index[entry["i"]]
            j = index[entry["j"]]
            num = Sparse()
            for a, b, c in entry["num"]:
                num.iadd((int(a), int(b)), parse_frac(c))
            scale = parse_frac(entry.get("den_scale", "1"))
            if scale == 0:
                raise MalformedInputError("zero denominator scale")
            r.add_entry(
                (i, j), BivarRat((1 / scale) * num, int(entry["den_power"]))
            )
        return alg, r
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedInputError(f"malformed tensor document: {exc}") from exc


def const_tensor_from_doc(doc, alg: LieAlgebraData) -> Sparse:
    """Constant 2-tensor from {"entries": [{"i","j","c"}, ...]}."""
    try:
        index = {label: k for k, label in enumerate(alg.basis)}
        out = Sparse()
        for entry in doc["entries"]:
            out.iadd((index[entry["i"]], index[entry["j"]]), parse_frac(entry["c"]))
        return out
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"malformed constant tensor: {exc}") from exc


def double_element_doc(alg, el: DoubleElement) -> dict:
    doc = {}
    loop = [
        [alg.basis[i], d, frac_str(c)]
        for (i, d), c in sorted(el.loop.items())
    ]
    if loop:
        doc["loop"] = loop
    fin = [[alg.basis[i], frac_str(c)] for i, c in sorted(el.fin.items())]
    if fin:
        doc["finite"] = fin
    eps = [[alg.basis[i], frac_str(c)] for i, c in sorted(el.eps.items())]
    if eps:
        doc["eps"] = eps
    return doc


def double_element_from_doc(doc, alg) -> DoubleElement:
    try:
        index = {label: k for k, label in enumerate(alg.basis)}
        loop = Sparse()
        for label, d, c in doc.get("loop", []):
            loop.iadd((index[label], int(d)), parse_frac(c))
        fin = Sparse()
        for label, c in doc.get("finite", []):
            fin.iadd(index[label], parse_frac(c))
        eps = Sparse()
        for label, c in doc.get("eps", []):
            eps.iadd(index[label], parse_frac(c))
        return DoubleElement(loop, fin=fin, eps=eps)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"malformed element record: {exc}") from exc


def wpresentation_to_doc(alg, w) -> dict:
    """Head generators plus the tail polynomial m(t), t = u^{-1}."""
    return {
        "case": w.spec.text,
        "head": [double_element_doc(alg, gen) for gen in w.head],
        "tail": [[d, frac_str(c)] for d, c in sorted(w.tail.items())],
    }


def wpresentation_from_doc(doc, alg):
    from .lagrangian import WPresentation
    from .pairing import CaseSpec

    try:
        spec = CaseSpec.parse(doc["case"])
        head = [double_element_from_doc(entry, alg) for entry in doc["head"]]
        tail = Sparse()
        for d, c in doc["tail"]:
            tail.iadd(int(d), parse_frac(c))
        if tail.is_zero():
            raise MalformedInputError("tail polynomial must be nonzero")
        return WPresentation(spec=spec, head=head, tail=tail)
    except MalformedInputError:
        raise
    except (KeyError, TypeError, ValueError, LbforgeError) as exc:
        raise MalformedInputError(f"malformed presentation: {exc}") from exc


def dump(doc, path=None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
