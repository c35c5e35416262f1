import enum
from json import JSONEncoder

import numpy as np

NP_INT_TYPES = (
    np.int_,
    np.intc,
    np.intp,
    np.int8,
    np.int16,
    np.int32,
    np.int64,
    np.uint8,
    np.uint16,
    np.uint32,
    np.uint64,
)

NP_BOOL_TYPES = (np.bool_,)

serializing_methods = [
    'to_dict',  # certificates
    'tolist',  # np.array
]


class LawvereJSONEncoder(JSONEncoder):
    # inspired by https://github.com/illagrenan/django-numpy-json-encoder

    def default(self, o):
        if isinstance(o, NP_INT_TYPES):
            return int(o)
        elif isinstance(o, NP_BOOL_TYPES):
            return bool(o)
        elif isinstance(o, (set, frozenset)):
            return sorted(o)
        elif isinstance(o, (range, zip)):
            return list(o)
        elif isinstance(o, enum.Enum):
            return o.value

        for m in serializing_methods:
            method = getattr(o, m, None)
            if callable(method):
                return method()

        return super().default(o)
