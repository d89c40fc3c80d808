from attr import attrib, NOTHING
from related import _init_fields

from ...exceptions import SpecParseError


def _check_int_rows(value):
    if not isinstance(value, (list, tuple)) or not all(isinstance(r, (list, tuple)) for r in value):
        raise SpecParseError("Expected a list of integer rows, got {0}".format(value))
    for row in value:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise SpecParseError("Non-integer matrix entry: {0}".format(x))
    if len(set(len(r) for r in value)) > 1:
        raise SpecParseError("Ragged matrix {0}".format(value))
    return [list(r) for r in value]


def to_int_rows(value):
    """Integer matrix as a list of rows; rejects floats, bools and strings
    """
    if value is None:
        return None
    return _check_int_rows(value)


def to_int_matrix_list(value):
    if value is None:
        return None
    if not isinstance(value, (list, tuple)):
        raise SpecParseError("Expected a list of integer matrices, got {0}".format(value))
    return [_check_int_rows(m) for m in value]


def to_selector_list(value):
    """List of group elements, each a label (str) or an integer matrix
    """
    if value is None:
        return None
    if not isinstance(value, (list, tuple)):
        raise SpecParseError("Expected a list of element labels or integer matrices, got {0}".
                             format(value))
    return [x if isinstance(x, str) else _check_int_rows(x) for x in value]


def _field(converter, default, required, repr):
    default = _init_fields.init_default(required, default, None)
    return attrib(default=default, converter=converter, validator=None,
                  repr=repr)


def IntMatrixField(default=NOTHING, required=True, repr=True):
    """
    Integer matrix given as a list of rows, e.g. [[0, 1], [-1, 0]]

    :param default: value used when the key is absent
    :param bool required: whether or not the object is invalid if not provided.
    :param bool repr: include this field should appear in object's repr.
    """
    return _field(to_int_rows, default, required, repr)


def IntMatrixListField(default=NOTHING, required=True, repr=True):
    """
    List of integer matrices, e.g. [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]
    """
    return _field(to_int_matrix_list, default, required, repr)


def SelectorListField(default=NOTHING, required=True, repr=True):
    """
    List of group elements given as labels ("a", "ab") or integer matrices
    """
    return _field(to_selector_list, default, required, repr)
