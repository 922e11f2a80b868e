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


from __future__ import annotations

import argparse
from typing import Any, List

from delcat.domain.arith import Rat, parse_rational, rat_str
from delcat.domain.center import (
    bernoulli_P,
    bernoulli_egf_check,
    chi_gl,
    printed_egf_value,
    sigma_probe,
)
from delcat.modules.base import Module as BaseModule, Response, natural_arg
from delcat.services.codec import format_poly, poly_json, rat_json


def rationals_arg(text: str) -> List[Rat]:
    """Comma separated rationals, "-" for the empty sequence."""
    if text.strip() in ("", "-"):
        return []
    try:
        return [parse_rational(x) for x in text.split(",")]
    except Exception as e:
        raise argparse.ArgumentTypeError(str(e))


class Module(BaseModule):
    name = "center"
    help = "central characters and modified Bernoulli polynomials"

    def register(self, subparsers: Any) -> None:
        p = subparsers.add_parser(self.name, help=self.help)
        sub = p.add_subparsers(dest="action", metavar="action")
        sub.required = True

        chi = self.add_parser(sub, "chi", help="chi_{lam,mu}(C_i) for i = 1..imax")
        chi.add_argument("--lam", type=rationals_arg, default=[])
        chi.add_argument("--mu", type=rationals_arg, default=[])
        chi.add_argument("--imax", type=natural_arg, default=4)

        b = self.add_parser(sub, "bernoulli", help="modified Bernoulli polynomial P_i(t)")
        b.add_argument("--i", type=natural_arg, required=True)
        b.add_argument("--printed-egf-at", type=int, default=None, metavar="N",
                       help="also report the printed generating function at t = N")

        pr = self.add_parser(sub, "probe", help="partition pairs within a bound sharing a central character")
        pr.add_argument("--lam", type=rationals_arg, default=[])
        pr.add_argument("--mu", type=rationals_arg, default=[])
        pr.add_argument("--imax", type=natural_arg, default=4)
        pr.add_argument("--bound", type=natural_arg, default=3)

    def handle(self, args: argparse.Namespace) -> Response:
        if args.action == "bernoulli":
            return self._bernoulli(args)
        query = {
            "command": "center",
            "action": args.action,
            "lam": [rat_json(x) for x in args.lam],
            "mu": [rat_json(x) for x in args.mu],
            "imax": args.imax,
        }
        chi = chi_gl(args.lam, args.mu, args.imax)
        if args.action == "chi":
            values = [poly_json(v) for v in chi.values]
            text = "\n".join(f"chi(C_{i}) = {format_poly(v)}" for i, v in enumerate(chi.values, start=1))
            return Response(query, {"values": values}, text)
        query["bound"] = args.bound
        found = sigma_probe(chi, args.bound)
        pairs = [{"lam": str(lam), "mu": str(mu)} for lam, mu in found]
        text = "\n".join(f"({lam}; {mu})" for lam, mu in found) or f"no witness with sizes <= {args.bound}"
        return Response(query, {"witnesses": pairs}, text)

    def _bernoulli(self, args: argparse.Namespace) -> Response:
        query = {"command": "center", "action": "bernoulli", "i": args.i}
        p = bernoulli_P(args.i)
        payload = {"poly": poly_json(p), "egf_agrees": bernoulli_egf_check(max(args.i, 1))}
        lines = [f"P_{args.i}(t) = {format_poly(p)}"]
        if args.printed_egf_at is not None:
            n = args.printed_egf_at
            query["printed_egf_at"] = n
            value = printed_egf_value(args.i, n)
            payload["printed_egf_value"] = rat_json(value)
            lines.append(f"printed generating function at t={n}: {rat_str(value)}")
        return Response(query, payload, "\n".join(lines))
