"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``SNORTCGT_PURE=1`` to force the fallback. Both backends return
identical results, including canonical key bytes.
"""

import os

_NAMES = [
    "GameTable",
    "canonical_order",
    "induced",
    "normalize_board",
    "board_components",
    "twin_classes",
    "canonical_board",
    "split_canonical",
    "move_children",
]

BACKEND = "python"

if os.environ.get("SNORTCGT_PURE", "").lower() not in ("1", "true", "yes"):
    try:
        from snortcgt import _core as _impl

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from snortcgt import _corepy as _impl

GameTable = _impl.GameTable
canonical_order = _impl.canonical_order
induced = _impl.induced
normalize_board = _impl.normalize_board
board_components = _impl.board_components
twin_classes = _impl.twin_classes
canonical_board = _impl.canonical_board
split_canonical = _impl.split_canonical
move_children = _impl.move_children

__all__ = ["BACKEND"] + _NAMES
