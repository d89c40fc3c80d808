import logging

import related
from attr import fields

from ...exceptions import SpecParseError

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class RelatedConfigMixin(object):
    """Provides a strict from_config and get_config to @related.immutable decorated classes

    Nested sections are listed in the class attribute `children`
    (field name -> model class) and parsed recursively, so unknown keys are
    rejected at every level.
    """
    children = {}

    @classmethod
    def from_config(cls, cfg, path=""):
        if not isinstance(cfg, dict):
            raise SpecParseError("Expected an object for {0}, got {1}".
                                 format(path or cls.__name__, type(cfg).__name__),
                                 field=path or None)
        attrs = fields(cls)
        cls_keys = {a.metadata.get('key') or a.name for a in attrs}
        cfg_keys = set(cfg.keys())
        extra_keys = cfg_keys - cls_keys
        if len(extra_keys) > 0:
            first = sorted(extra_keys)[0]
            raise SpecParseError("Unrecognized fields for {0}: {1}. Available fields are {2}".
                                 format(cls.__name__, sorted(extra_keys), sorted(cls_keys)),
                                 field=path + "." + first if path else first)
        cfg = dict(cfg)
        for name, child_cls in cls.children.items():
            if cfg.get(name) is not None:
                cfg[name] = child_cls.from_config(cfg[name], path + "." + name if path else name)
        try:
            return related.to_model(cls, cfg)
        except (TypeError, ValueError) as e:
            if isinstance(e, SpecParseError):
                if e.field is None:
                    e.field = path or None
                raise
            raise SpecParseError("Invalid {0}: {1}".format(path or cls.__name__, e),
                                 field=path or None)

    def get_config(self):
        return related.to_dict(self)
