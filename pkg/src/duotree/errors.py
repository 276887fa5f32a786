"""Exception hierarchy.

Everything raised on bad *data* derives from :class:`DuotreeError` so the
CLI can map it to a single exit code; bad *API usage* (wrong types, wrong
argument combinations) raises the ordinary built-ins instead.
"""


class DuotreeError(Exception):
    """Base class for all data-level errors raised by this package."""


class TreeBuildError(DuotreeError):
    """A node list could not be assembled into a valid tree."""


class MultipleRootsError(TreeBuildError):
    pass


class UnknownParentError(TreeBuildError):
    pass


class CycleDetectedError(TreeBuildError):
    pass


class NegativeWeightError(TreeBuildError):
    pass


class DuplicateLabelError(TreeBuildError):
    pass


class ParseError(DuotreeError):
    """An input document or CSV file is malformed; message names the spot."""


class RootLabelMismatchError(DuotreeError):
    """Two trees cannot be aligned because their root labels differ."""


class NoAnchorError(DuotreeError):
    """Subtree matching found no occurrence of the small tree's root label."""


class AlreadySelectedError(DuotreeError):
    """A marginal gain was requested for a node already in the selection."""


class EmptySelectionError(DuotreeError):
    """A metric that needs at least one representative got an empty set."""


class EmptyTreeError(DuotreeError):
    pass


class TooLargeForOracleError(DuotreeError):
    """The exhaustive optimum is only available for small instances."""
