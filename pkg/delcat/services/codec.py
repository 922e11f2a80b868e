# This file is part of delcat.
#
# delcat is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# delcat is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with delcat. If not, see <https://www.gnu.org/licenses/>.


"""Text and JSON rendering of exact values; JSON decoding for round trips."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Union

from sympy.polys.domains import QQ

from delcat.core.exceptions import NotIntegerValued, ValidationError
from delcat.domain.arith import (
    PolyT,
    Rat,
    RatFuncT,
    SeriesQ,
    as_poly,
    is_integral,
    is_poly,
    monic_parts,
    parse_rational,
    poly_coeffs,
    poly_from_coeffs,
    rat_str,
    to_binomial,
    to_frac,
)
from delcat.domain.diagrams import DiagElement
from delcat.domain.symfunc import SchurExpr

JsonRat = Union[int, str]


# ------------------------------------------------------------------- json

def rat_json(x: Rat) -> JsonRat:
    return int(QQ.numer(x)) if is_integral(x) else rat_str(x)


def rat_from_json(v: JsonRat) -> Rat:
    if isinstance(v, bool):
        raise ValidationError("Boolean in rational payload", {"value": v})
    if isinstance(v, int):
        return QQ(v)
    if isinstance(v, str):
        return parse_rational(v)
    raise ValidationError("Rationals are encoded as integers or p/q strings", {"value": v})


def poly_json(p: PolyT) -> Dict[str, Any]:
    try:
        binomial: Optional[List[int]] = list(to_binomial(p).coeffs)
    except NotIntegerValued:
        binomial = None
    return {"power": [rat_json(c) for c in poly_coeffs(p)], "binomial": binomial}


def poly_from_json(obj: Dict[str, Any]) -> PolyT:
    try:
        power = obj["power"]
    except (KeyError, TypeError) as e:
        raise ValidationError("Polynomial payload needs a power array", cause=e)
    return poly_from_coeffs(rat_from_json(c) for c in power)


def ratfunc_json(f: RatFuncT) -> Dict[str, Any]:
    if is_poly(f):
        return {"poly": poly_json(as_poly(f))}
    num, den = monic_parts(f)
    return {"num": [rat_json(c) for c in poly_coeffs(num)], "den": [rat_json(c) for c in poly_coeffs(den)]}


def series_coeff_json(c: RatFuncT) -> Any:
    if is_poly(c):
        return [rat_json(x) for x in poly_coeffs(as_poly(c))]
    num, den = monic_parts(c)
    return {"num": [rat_json(x) for x in poly_coeffs(num)], "den": [rat_json(x) for x in poly_coeffs(den)]}


def series_json(s: SeriesQ) -> Dict[str, Any]:
    return {"trunc": s.trunc, "coeffs": [series_coeff_json(c) for c in s.coeffs]}


def series_from_json(obj: Dict[str, Any]) -> SeriesQ:
    coeffs = []
    for c in obj["coeffs"]:
        if isinstance(c, dict):
            num = poly_from_coeffs(rat_from_json(x) for x in c["num"])
            den = poly_from_coeffs(rat_from_json(x) for x in c["den"])
            coeffs.append((num, den))
        else:
            coeffs.append((poly_from_coeffs(rat_from_json(x) for x in c), None))
    return SeriesQ.from_coeffs(
        [to_frac(n) if d is None else to_frac(n) / to_frac(d) for n, d in coeffs],
        int(obj["trunc"]),
    )


def schur_json(f: SchurExpr) -> Dict[str, Any]:
    return {"degree": f.degree, "terms": [{"nu": list(nu.parts), "coeff": rat_json(c)} for nu, c in f.items()]}


def element_json(el: DiagElement) -> Dict[str, Any]:
    return {
        "source": str(el.source),
        "target": str(el.target),
        "terms": [{"diagram": str(d), "coeff": ratfunc_json(c)} for d, c in el.items()],
    }


def dumps(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"), ensure_ascii=False)


# ------------------------------------------------------------------- text

def format_poly(p: PolyT, var: str = "t") -> str:
    coeffs = poly_coeffs(p)
    if not coeffs:
        return "0"
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = rat_str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{rat_str(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _wrap(text: str) -> str:
    return f"({text})" if (" " in text or text.startswith("-")) else text


def format_ratfunc(f: RatFuncT, var: str = "t") -> str:
    if is_poly(f):
        return format_poly(as_poly(f), var)
    num, den = monic_parts(f)
    return f"{_wrap(format_poly(num, var))}/{_wrap(format_poly(den, var))}"


def format_series(s: SeriesQ, var: str = "q") -> str:
    out = []
    for d, c in enumerate(s.coeffs):
        if not c:
            continue
        coeff = format_ratfunc(c)
        neg = coeff.startswith("-") and " " not in coeff and "/(" not in coeff
        mag = coeff[1:] if neg else coeff
        if d == 0:
            body = mag
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == "1" else f"{_wrap(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    body = "".join(out) if out else "0"
    return f"{body} + O({var}^{s.trunc + 1})"


def format_schur(f: SchurExpr) -> str:
    if not f.terms:
        return "0"
    parts = []
    for nu, c in f.items():
        label = f"s[{nu}]"
        parts.append(label if c == 1 else f"{rat_str(c)}*{label}")
    return " + ".join(parts)


def format_element(el: DiagElement) -> str:
    parts = []
    for d, c in el.items():
        coeff = format_ratfunc(c)
        label = f"[{d}]"
        parts.append(label if coeff == "1" else f"{_wrap(coeff)}*{label}")
    return " + ".join(parts) if parts else "0"
