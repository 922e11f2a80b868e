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

from delcat.domain.invariants import (
    VARIANTS,
    NecklaceFamily,
    harmonic_hilbert,
    hilb_multi_inv,
    kostant_identity_report,
    necklace_generators,
)
from delcat.domain.partitions import EMPTY
from delcat.modules.base import Module as BaseModule, Response, natural_arg, partition_arg
from delcat.services.codec import format_ratfunc, format_series, ratfunc_json, series_json


class Module(BaseModule):
    name = "series"
    help = "Hilbert series of invariant rings and harmonic parts"

    def register(self, subparsers: Any) -> None:
        p = subparsers.add_parser(self.name, help=self.help)
        sub = p.add_subparsers(dest="action", metavar="action")
        sub.required = True

        m = self.add_parser(sub, "multiinv", help="Hilbert series of invariants of m matrices")
        m.add_argument("--m", type=natural_arg, required=True)
        m.add_argument("--variant", choices=VARIANTS, default="gl")

        h = self.add_parser(sub, "harmonic", help="Hilbert series of Hom(X_{lam,mu}, E)")
        h.add_argument("--lam", type=partition_arg, default=EMPTY)
        h.add_argument("--mu", type=partition_arg, default=EMPTY)

        k = self.add_parser(sub, "kostant-check", help="check the harmonic decomposition of S(gl_t) to q^trunc")
        k.add_argument("--paper-rhs", "--printed-rhs", dest="printed_rhs", action="store_true",
                       help="compare against the printed right-hand side")

    def handle(self, args: argparse.Namespace) -> Response:
        n = self.trunc
        query = {"command": "series", "action": args.action, "trunc": n}
        if args.action == "multiinv":
            family = NecklaceFamily(args.variant, args.m)
            query.update(m=args.m, variant=args.variant)
            s = hilb_multi_inv(family, n)
            generators = [necklace_generators(family, j) for j in range(1, n + 1)]
            text = f"{format_series(s)}\ngenerators by degree: {generators}"
            return Response(query, {"series": series_json(s), "generators": generators}, text)
        if args.action == "harmonic":
            query.update(lam=str(args.lam), mu=str(args.mu))
            s = harmonic_hilbert(args.lam, args.mu, n)
            return Response(query, {"series": series_json(s)}, format_series(s))
        return self._kostant(args, query)

    def _kostant(self, args: argparse.Namespace, query) -> Response:
        query["printed_rhs"] = args.printed_rhs
        report = kostant_identity_report(query["trunc"], args.printed_rhs)
        payload = {"holds": report.holds, "first_mismatch": report.first_mismatch}
        if report.holds:
            return Response(query, payload, f"identity holds to q^{report.trunc}")
        payload.update(lhs=ratfunc_json(report.lhs), rhs=ratfunc_json(report.rhs))
        text = "\n".join([
            f"identity fails at q^{report.first_mismatch}",
            f"  lhs: {format_ratfunc(report.lhs)}",
            f"  rhs: {format_ratfunc(report.rhs)}",
        ])
        return Response(query, payload, text, exit_code=1)
