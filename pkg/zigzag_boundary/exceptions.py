"""Exceptions raised by the zigzag_boundary package."""

from pathlib import Path
from typing import Optional, Union


class ZigzagError(Exception):
    """Base class of every error raised by the package."""


class CompositionError(ZigzagError, ValueError):
    """Invalid composition, binary word or partition."""


class PermutationError(ZigzagError, ValueError):
    """Invalid permutation or restriction index."""


class BasisError(ZigzagError, ValueError):
    """Operation applied to an element expressed in the wrong basis."""


class CharacterError(ZigzagError, ValueError):
    """Invalid arguments to a character construction or evaluation."""


class PaintboxError(ZigzagError, ValueError):
    """Malformed oriented paintbox."""


class PaintboxFormatError(PaintboxError):
    """Parse failure in a paintbox file, located by path and line number."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        path: Optional[Union[str, Path]] = None,
    ):
        self.line = line
        self.path = path
        location = ""
        if path is not None:
            location += f"{path}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}" if location else message)


class BoundExceededError(ZigzagError):
    """A size limit of an exact computation was exceeded."""
