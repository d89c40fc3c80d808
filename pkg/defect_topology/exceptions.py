"""Exceptions raised by defect_topology

Everything the CLI maps to a non-zero exit code derives from
`DefectTopologyError`.
"""


class DefectTopologyError(ValueError):
    """Base class. `field` names the offending spec field, if any
    """

    def __init__(self, message, field=None):
        super(DefectTopologyError, self).__init__(message)
        self.field = field


class DimensionMismatch(DefectTopologyError):
    pass


class NonIntegerEntry(DefectTopologyError):
    pass


class InfiniteOrderError(DefectTopologyError):
    pass


class UnsupportedOrder(DefectTopologyError):
    pass


class UnsupportedSpace(DefectTopologyError):
    pass


class InconsistentSpec(DefectTopologyError):
    pass


class UnsupportedPair(DefectTopologyError):
    pass


class SubgroupNotContained(DefectTopologyError):
    pass


class NonEmptyDefectSet(DefectTopologyError):
    pass


class SpecParseError(DefectTopologyError):
    """Raised for unreadable or malformed spec files

    Args:
      message: diagnostic
      line: 1-based line of the problem (None if unknown)
      column: 1-based column of the problem (None if unknown)
    """

    def __init__(self, message, line=None, column=None, field=None):
        if line is not None:
            message = "line {0}, column {1}: {2}".format(line, column, message)
        super(SpecParseError, self).__init__(message, field=field)
        self.line = line
        self.column = column


class InvariantViolation(RuntimeError):
    """An internal invariant failed (e.g. group closure exceeded its cap)
    """
    pass
