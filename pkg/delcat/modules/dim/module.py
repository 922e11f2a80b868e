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

from delcat.domain.arith import evaluate, parse_rational, rat_str
from delcat.domain.dims import dim_gl, dim_o
from delcat.domain.partitions import EMPTY
from delcat.modules.base import Module as BaseModule, Response, partition_arg
from delcat.services.codec import format_poly, poly_json, rat_json


class Module(BaseModule):
    name = "dim"
    help = "dimension polynomials of simple objects"

    def register(self, subparsers: Any) -> None:
        p = subparsers.add_parser(self.name, help=self.help)
        sub = p.add_subparsers(dest="family", metavar="family")
        sub.required = True
        gl = self.add_parser(sub, "gl", help="dim X_{lam,mu} in Rep(GL_t)")
        gl.add_argument("--lam", type=partition_arg, default=EMPTY)
        gl.add_argument("--mu", type=partition_arg, default=EMPTY)
        gl.add_argument("--at", type=parse_rational, default=None, help="evaluate at a rational t")
        o = self.add_parser(sub, "o", help="dim X_lam in Rep(O_t)")
        o.add_argument("--lam", type=partition_arg, default=EMPTY)
        o.add_argument("--at", type=parse_rational, default=None)

    def handle(self, args: argparse.Namespace) -> Response:
        query = {"command": "dim", "family": args.family, "lam": str(args.lam)}
        if args.family == "gl":
            query["mu"] = str(args.mu)
            p = dim_gl(args.lam, args.mu)
        else:
            p = dim_o(args.lam)
        if args.at is not None:
            query["at"] = rat_str(args.at)
            value = evaluate(p, args.at)
            return Response(query, {"value": rat_json(value)}, rat_str(value))
        return Response(query, {"poly": poly_json(p)}, format_poly(p))
