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

"""Kernel counters and verify-suite gauges in a private prometheus registry."""

from __future__ import annotations

import os

from prometheus_client import CollectorRegistry, Counter, Gauge, generate_latest, write_to_textfile

from delcat.core.exceptions import ConfigurationError

registry = CollectorRegistry()

diagram_compositions = Counter(
    "delcat_diagram_compositions_total", "Diagram pairs composed", ["family"], registry=registry
)
closed_loops = Counter(
    "delcat_closed_loops_total", "Closed loops removed during composition or closure", ["family"], registry=registry
)
series_multiplications = Counter(
    "delcat_series_multiplications_total", "Truncated q-series products", registry=registry
)
character_evaluations = Counter(
    "delcat_character_evaluations_total", "Murnaghan-Nakayama evaluations not served by the memo", registry=registry
)

suite_seconds = Gauge("delcat_verify_suite_seconds", "Wall time of a verify suite", ["suite"], registry=registry)
suite_rss_bytes = Gauge("delcat_verify_suite_rss_bytes", "Resident set size after a verify suite", ["suite"], registry=registry)
suite_passed = Gauge("delcat_verify_suite_passed", "1 if every check of the suite passed", ["suite"], registry=registry)


def render_metrics() -> str:
    return generate_latest(registry).decode("utf-8")


def write_metrics(path: str) -> None:
    d = os.path.dirname(path)
    try:
        if d and not os.path.exists(d):
            os.makedirs(d, exist_ok=True)
        write_to_textfile(path, registry)
    except OSError as e:
        raise ConfigurationError("Cannot write metrics file", {"path": path}, cause=e)
