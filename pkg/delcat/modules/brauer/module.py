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

from delcat.domain.diagrams import O
from delcat.modules.hom.module import DiagramCommands


class Module(DiagramCommands):
    """Brauer diagrams. Rep(Sp_2t) uses the same calculus."""

    name = "brauer"
    help = "Brauer diagrams, morphisms of Rep(O_t)"
    family = O
