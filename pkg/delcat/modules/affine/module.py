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
from typing import Any

from delcat.domain.affine import (
    LIE_FAMILIES,
    c_finite,
    c_infinity,
    c_infinity_tilde,
    central_charge_at,
    lie_family,
    stabilization_check,
    sugawara_constants,
    sugawara_degree_gap,
)
from delcat.domain.arith import parse_rational, rat_str
from delcat.domain.partitions import EMPTY, parse_weight
from delcat.modules.base import Module as BaseModule, Response, natural_arg, partition_arg
from delcat.services.codec import (
    format_poly,
    format_ratfunc,
    format_series,
    poly_json,
    rat_json,
    ratfunc_json,
    series_json,
)


def weight_arg(text: str):
    try:
        return parse_weight(text)
    except Exception as e:
        raise argparse.ArgumentTypeError(str(e))


class Module(BaseModule):
    name = "affine"
    help = "basic representation characters of affine gl_t and Sugawara constants"

    def register(self, subparsers: Any) -> None:
        p = subparsers.add_parser(self.name, help=self.help)
        sub = p.add_subparsers(dest="action", metavar="action")
        sub.required = True

        c = self.add_parser(sub, "cinf", help="stable character C_{lam,mu,inf}(q)")
        c.add_argument("--lam", type=partition_arg, default=EMPTY)
        c.add_argument("--mu", type=partition_arg, default=EMPTY)
        c.add_argument("--tilde", action="store_true", help="multiply by the Fock space factor prod (1-q^i)^-1")

        n = self.add_parser(sub, "cn", help="finite-rank character C_{nu,n}(q)")
        n.add_argument("--weight", type=weight_arg, required=True, help="dominant traceless weight, e.g. 1,0,-1")

        s = self.add_parser(sub, "stab", help="least rank where the finite characters reach the limit")
        s.add_argument("--lam", type=partition_arg, default=EMPTY)
        s.add_argument("--mu", type=partition_arg, default=EMPTY)
        s.add_argument("--cap", type=natural_arg, default=None, help="largest rank to try")

        g = self.add_parser(sub, "sugawara", help="critical level and central charge")
        g.add_argument("--family", choices=sorted(LIE_FAMILIES), required=True)
        g.add_argument("--k", type=parse_rational, required=True)
        g.add_argument("--at", type=parse_rational, default=None, help="evaluate the central charge at t")

    def handle(self, args: argparse.Namespace) -> Response:
        query = {"command": "affine", "action": args.action}
        if args.action == "sugawara":
            return self._sugawara(args, query)
        query["trunc"] = self.trunc
        if args.action == "cn":
            query["weight"] = list(args.weight)
            s = c_finite(args.weight, self.trunc)
            return Response(query, {"series": series_json(s)}, format_series(s))
        query.update(lam=str(args.lam), mu=str(args.mu))
        if args.action == "cinf":
            query["tilde"] = args.tilde
            fn = c_infinity_tilde if args.tilde else c_infinity
            s = fn(args.lam, args.mu, self.trunc)
            return Response(query, {"series": series_json(s)}, format_series(s))
        rank = stabilization_check(args.lam, args.mu, self.trunc, args.cap)
        return Response(query, {"rank": rank}, f"stable from rank {rank} to q^{self.trunc}")

    def _sugawara(self, args: argparse.Namespace, query) -> Response:
        consts = sugawara_constants(lie_family(args.family), args.k)
        query.update(family=args.family, k=rat_json(args.k))
        payload = {
            "critical_level": poly_json(consts.critical),
            "central_charge": ratfunc_json(consts.central_charge),
            "degree_gap": sugawara_degree_gap(consts),
        }
        lines = [
            f"critical level: {format_poly(consts.critical)}",
            f"central charge: {format_ratfunc(consts.central_charge)}",
        ]
        if args.at is not None:
            query["at"] = rat_json(args.at)
            value = central_charge_at(consts, args.at)
            payload["value"] = rat_json(value)
            lines.append(f"at t={rat_str(args.at)}: {rat_str(value)}")
        return Response(query, payload, "\n".join(lines))
