"""Error taxonomy shared by every module.

Four failure classes, kept deliberately coarse so callers (and the CLI) can
map them to exit codes without inspecting messages:

* ``InputError``        -- malformed user input (bad code text, bad options)
* ``UnrealizableError`` -- syntactically valid code with no planar diagram
* ``ResourceError``     -- a configured cap (crossing count, budget) was hit
* ``InternalError``     -- an invariant of the implementation itself broke
"""


class GordianError(Exception):
    """Base class for all package errors."""


class InputError(GordianError):
    pass


class UnrealizableError(GordianError):
    pass


class ResourceError(GordianError):
    pass


class InternalError(GordianError):
    pass
