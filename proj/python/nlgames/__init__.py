"""Two-party one-round nonlocal games.

Evaluation of classical and quantum strategies, detection of
weak-projection structure, maximally entangled substitution,
consistency-question transforms, and one-way communication protocols
built from coloring-game strategies.
"""

try:
    from ._core import *  # noqa: F401,F403  (wheel layout)
except ImportError:  # pragma: no cover - build-tree layout
    from _core import *  # noqa: F401,F403
