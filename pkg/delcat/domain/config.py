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
from dataclasses import dataclass, field
from typing import List, Optional

from delcat.core.exceptions import ValidationError
from delcat.domain.arith import DEFAULT_TRUNC

MAX_TRUNC = 512
OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DEFAULT_MODULES = ["dim", "hom", "brauer", "kron", "spec", "center", "series", "affine", "verify"]


def _get_list(raw: Optional[str], default: List[str]) -> List[str]:
    if raw is None:
        return list(default)
    parts = [p.strip() for p in raw.split(",")]
    return [p for p in parts if p]


@dataclass
class Settings:
    trunc: int = DEFAULT_TRUNC
    output_format: str = "text"
    log_level: str = "WARNING"
    seed: int = 0
    metrics_file: Optional[str] = None
    modules: List[str] = field(default_factory=lambda: list(DEFAULT_MODULES))

    def __post_init__(self):
        self._validate()

    def _validate(self):
        errors = []

        if not 0 <= self.trunc <= MAX_TRUNC:
            errors.append(f"trunc must be between 0 and {MAX_TRUNC}")

        if self.output_format not in OUTPUT_FORMATS:
            errors.append("format must be one of " + ", ".join(OUTPUT_FORMATS))

        if self.log_level.upper() not in LOG_LEVELS:
            errors.append("log_level must be one of " + ", ".join(LOG_LEVELS))

        if self.seed < 0:
            errors.append("seed must be non-negative")

        if self.metrics_file is not None and not self.metrics_file.strip():
            errors.append("metrics_file must not be empty")

        unknown = [m for m in self.modules if m not in DEFAULT_MODULES and "." not in m]
        if unknown:
            errors.append("unknown modules: " + ", ".join(unknown))

        if not self.modules:
            errors.append("at least one module is required")

        if errors:
            raise ValidationError("Configuration validation failed", {"errors": errors})

    @property
    def json_output(self) -> bool:
        return self.output_format == "json"


def add_global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--trunc", type=int, default=DEFAULT_TRUNC, help="q-series truncation order N (default 16)")
    parser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default="text")
    parser.add_argument("--log-level", default="WARNING")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    parser.add_argument("--metrics-file", default=None, help="write prometheus text exposition here")
    parser.add_argument("--modules", default=None, help="comma separated command families to load")


def load_settings(args: argparse.Namespace) -> Settings:
    return Settings(
        trunc=getattr(args, "trunc", DEFAULT_TRUNC),
        output_format=getattr(args, "output_format", "text"),
        log_level=getattr(args, "log_level", "WARNING").upper(),
        seed=getattr(args, "seed", 0),
        metrics_file=getattr(args, "metrics_file", None),
        modules=_get_list(getattr(args, "modules", None), DEFAULT_MODULES),
    )
