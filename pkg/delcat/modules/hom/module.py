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

from delcat.domain.arith import rat_str
from delcat.domain.diagrams import (
    GL,
    DiagElement,
    Diagram,
    ObjectSig,
    closure_trace,
    compose,
    gram_det,
    hom_basis,
    tensor,
)
from delcat.modules.base import Module as BaseModule, Response
from delcat.services.codec import (
    element_json,
    format_element,
    format_poly,
    format_ratfunc,
    poly_json,
    rat_json,
    ratfunc_json,
)


class DiagramCommands(BaseModule):
    """basis / compose / tensor / trace / gram over one diagram family."""

    name = "hom"
    help = "walled Brauer diagrams, morphisms of Rep(GL_t)"
    family = GL

    def register(self, subparsers: Any) -> None:
        p = subparsers.add_parser(self.name, help=self.help)
        sub = p.add_subparsers(dest="action", metavar="action")
        sub.required = True

        b = self.add_parser(sub, "basis", help="diagram basis of Hom(src, dst)")
        b.add_argument("--src", required=True)
        b.add_argument("--dst", required=True)

        c = self.add_parser(sub, "compose", help="g o f for f: src -> mid, g: mid -> dst")
        c.add_argument("--src", required=True)
        c.add_argument("--mid", required=True)
        c.add_argument("--dst", required=True)
        c.add_argument("--f", required=True, help="edge list of f")
        c.add_argument("--g", required=True, help="edge list of g")

        t = self.add_parser(sub, "tensor", help="d1 (x) d2")
        for k in ("1", "2"):
            t.add_argument(f"--src{k}", required=True)
            t.add_argument(f"--dst{k}", required=True)
            t.add_argument(f"--d{k}", required=True, help=f"edge list of diagram {k}")

        tr = self.add_parser(sub, "trace", help="closure trace of an endomorphism diagram")
        tr.add_argument("--obj", required=True)
        tr.add_argument("--diagram", required=True)

        g = self.add_parser(sub, "gram", help="Gram determinant of End(obj)")
        g.add_argument("--obj", required=True)

    def _obj(self, text: str) -> ObjectSig:
        return ObjectSig.parse(text, self.family)

    def _diagram(self, text: str, src: str, dst: str) -> Diagram:
        return Diagram.parse(text, self._obj(src), self._obj(dst))

    def handle(self, args: argparse.Namespace) -> Response:
        handler = getattr(self, f"_{args.action}")
        query = {"command": self.name, "action": args.action}
        return handler(args, query)

    def _basis(self, args, query) -> Response:
        src, dst = self._obj(args.src), self._obj(args.dst)
        query.update(src=str(src), dst=str(dst))
        basis = hom_basis(src, dst)
        lines = [f"dim Hom({src}, {dst}) = {len(basis)}"] + [str(d) for d in basis]
        return Response(query, {"dim": len(basis), "diagrams": [str(d) for d in basis]}, "\n".join(lines))

    def _compose(self, args, query) -> Response:
        f = DiagElement.of(self._diagram(args.f, args.src, args.mid))
        g = DiagElement.of(self._diagram(args.g, args.mid, args.dst))
        query.update(f=str(args.f), g=str(args.g))
        out = compose(g, f)
        return Response(query, {"element": element_json(out)}, format_element(out))

    def _tensor(self, args, query) -> Response:
        d1 = DiagElement.of(self._diagram(args.d1, args.src1, args.dst1))
        d2 = DiagElement.of(self._diagram(args.d2, args.src2, args.dst2))
        query.update(d1=args.d1, d2=args.d2)
        out = tensor(d1, d2)
        return Response(query, {"element": element_json(out)}, format_element(out))

    def _trace(self, args, query) -> Response:
        el = DiagElement.of(self._diagram(args.diagram, args.obj, args.obj))
        query.update(obj=str(el.source), diagram=args.diagram)
        value = closure_trace(el)
        return Response(query, {"trace": ratfunc_json(value)}, format_ratfunc(value))

    def _gram(self, args, query) -> Response:
        report = gram_det(self._obj(args.obj))
        query.update(obj=str(report.obj))
        roots = [rat_json(r) for r in report.roots]
        text = "\n".join([
            f"basis size: {report.size}",
            f"det: {format_poly(report.det)}",
            "roots: " + (", ".join(rat_str(r) for r in report.roots) or "none"),
        ])
        return Response(query, {"size": report.size, "det": poly_json(report.det), "roots": roots}, text)


class Module(DiagramCommands):
    pass
