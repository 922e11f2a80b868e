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

from delcat.domain.partitions import EMPTY
from delcat.domain.symfunc import kronecker
from delcat.modules.base import Module as BaseModule, Response, partition_arg
from delcat.services.codec import format_schur, schur_json


class Module(BaseModule):
    name = "kron"
    help = "Kronecker product s_lam * s_mu in the Schur basis"

    def register(self, subparsers: Any) -> None:
        p = self.add_parser(subparsers, self.name, help=self.help)
        p.add_argument("--lam", type=partition_arg, default=EMPTY)
        p.add_argument("--mu", type=partition_arg, default=EMPTY)

    def handle(self, args: argparse.Namespace) -> Response:
        f = kronecker(args.lam, args.mu)
        query = {"command": "kron", "lam": str(args.lam), "mu": str(args.mu)}
        return Response(query, {"schur": schur_json(f)}, format_schur(f))
