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
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict

from delcat.domain.config import OUTPUT_FORMATS
from delcat.domain.partitions import Partition


@dataclass
class Response:
    query: Dict[str, Any]
    payload: Dict[str, Any]
    text: str
    exit_code: int = 0


class Module(ABC):
    name: str = "module"
    help: str = ""

    def __init__(self, ctx: Any):
        self.ctx = ctx

    @abstractmethod
    def register(self, subparsers: Any) -> None:
        ...

    @abstractmethod
    def handle(self, args: argparse.Namespace) -> Response:
        ...

    @property
    def trunc(self) -> int:
        return self.ctx.settings.trunc

    def add_parser(self, subparsers: Any, name: str, **kwargs) -> argparse.ArgumentParser:
        """Subcommand parser that also accepts --trunc / --format after the subcommand."""
        p = subparsers.add_parser(name, **kwargs)
        p.add_argument("--trunc", type=int, default=argparse.SUPPRESS)
        p.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS)
        p.set_defaults(module=self)
        return p


def partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except Exception as e:
        raise argparse.ArgumentTypeError(str(e))



def natural_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value
