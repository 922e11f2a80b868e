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
import sys
from typing import List, Optional

from delcat.core.app import App
from delcat.core.exceptions import ConfigurationError, DelcatError, SizeMismatch, ValidationError, WeightError
from delcat.domain.config import add_global_flags, load_settings


def _preparse(argv: List[str]) -> argparse.Namespace:
    """Global flags only, so the module list is known before building the parser."""
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    add_global_flags(pre)
    args, _ = pre.parse_known_args(argv)
    return args


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        app = App(load_settings(_preparse(argv)))
        args = app.build_parser().parse_args(argv)
        app.configure(load_settings(args))
        return app.run(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except (ConfigurationError, ValidationError, SizeMismatch, WeightError) as e:
        print(f"delcat: error: {e}", file=sys.stderr)
        return 2
    except DelcatError as e:
        print(f"delcat: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
