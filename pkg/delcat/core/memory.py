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

import os
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

import psutil

from delcat.core.exceptions import DelcatError


@dataclass
class ResourceStats:
    rss_mb: float
    timestamp: float


@dataclass
class ResourceUsage:
    seconds: float = 0.0
    rss_mb: float = 0.0
    rss_delta_mb: float = 0.0


class ResourceMonitor:
    """Wall time and resident memory around expensive sweeps (verify suites)."""

    def __init__(self):
        self._process = psutil.Process(os.getpid())

    def get_stats(self) -> ResourceStats:
        try:
            mem_info = self._process.memory_info()
            return ResourceStats(
                rss_mb=mem_info.rss / 1024 / 1024,
                timestamp=time.perf_counter(),
            )
        except Exception as e:
            raise DelcatError("Failed to get resource stats", cause=e)

    @contextmanager
    def track(self) -> Iterator[ResourceUsage]:
        usage = ResourceUsage()
        before = self.get_stats()
        try:
            yield usage
        finally:
            after = self.get_stats()
            usage.seconds = after.timestamp - before.timestamp
            usage.rss_mb = after.rss_mb
            usage.rss_delta_mb = after.rss_mb - before.rss_mb
