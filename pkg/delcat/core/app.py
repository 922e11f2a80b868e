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
import importlib
import logging
from dataclasses import dataclass
from typing import Any, List

from delcat.core import metrics
from delcat.core.exceptions import ModuleError
from delcat.core.logging import setup_logging
from delcat.core.memory import ResourceMonitor
from delcat.domain.config import Settings, add_global_flags
from delcat.services.codec import dumps
from delcat.version import get_version


@dataclass
class AppContext:
    settings: Settings
    version: str
    monitor: ResourceMonitor


class App:
    def __init__(self, settings: Settings):
        self.settings = settings
        self.log = setup_logging(settings.log_level)
        self.version = get_version()
        self.log.info("delcat version: %s", self.version)
        self.ctx = AppContext(settings=settings, version=self.version, monitor=ResourceMonitor())
        self.modules = []  # type: List[Any]
        for n in settings.modules:
            self.modules.append(self._load_module(n))
        self.log.debug("Modules loaded: %s", ", ".join(getattr(m, "name", "module") for m in self.modules))

    def _import_symbol(self, path: str):
        mod_name, _, sym = path.partition(":")
        if not sym:
            raise ModuleError("Invalid module path spec (missing symbol)", {"path": path})
        try:
            mod = importlib.import_module(mod_name)
            return getattr(mod, sym)
        except (ImportError, AttributeError) as e:
            raise ModuleError("Cannot load command module", {"path": path}, cause=e)

    def _load_module(self, name: str):
        # Accept dotted path with :Symbol or shorthand name
        spec = name
        if ":" not in spec and "." not in spec:
            # shorthand -> delcat.modules.<name>.module:Module
            spec = f"delcat.modules.{name}.module:Module"
        cls = self._import_symbol(spec)
        return cls(self.ctx)

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="delcat",
            allow_abbrev=False,
            description="Exact computations in the Deligne categories Rep(GL_t), Rep(O_t), Rep(Sp_2t).",
        )
        add_global_flags(parser)
        parser.add_argument("--version", action="version", version=f"delcat {self.version}")
        sub = parser.add_subparsers(dest="command", metavar="command")
        sub.required = True
        for m in self.modules:
            m.register(sub)
        return parser

    def configure(self, settings: Settings) -> None:
        """Apply settings parsed from the full command line."""
        self.settings = settings
        self.ctx.settings = settings
        setup_logging(settings.log_level)

    def run(self, args: argparse.Namespace) -> int:
        module = args.module
        self.log.debug("dispatch %s to module %s", args.command, module.name)
        resp = module.handle(args)
        if self.settings.json_output:
            print(dumps({"query": resp.query, **resp.payload}))
        else:
            print(resp.text)
        if self.settings.metrics_file:
            metrics.write_metrics(self.settings.metrics_file)
            logging.getLogger("delcat").info("metrics written to %s", self.settings.metrics_file)
        return resp.exit_code
