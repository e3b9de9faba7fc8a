"""Point counts of braid stacks over unipotent classes of reductive groups."""

import json
import os

from . import _core
from ._core import TierUnavailable, chamber_check, normal_form, root_elements, stack_count_bruteforce

_DATA = os.path.join(os.path.dirname(__file__), "data")


def _data_dir(data_dir):
    if data_dir:
        return data_dir
    if os.environ.get("ISOCLINIC_DATA"):
        return ""
    return _DATA if os.path.isdir(_DATA) else ""


def count(type="", slope="", word=(), power=1, gl=0, data_dir=""):
    return json.loads(_core.count_json(type, slope, list(word), power, gl, _data_dir(data_dir)))


def interval(type="", slope="", word=(), power=1, gl=0, data_dir=""):
    return json.loads(_core.interval_json(type, slope, list(word), power, gl, _data_dir(data_dir)))


def count_min(type="", slope="", gl=0, data_dir=""):
    return json.loads(_core.count_min_json(type, slope, gl, _data_dir(data_dir)))


def springer(type):
    return json.loads(_core.springer_json(type))


def validate_data(type, data_dir=""):
    return json.loads(_core.validate_json(type, _data_dir(data_dir)))


def oracle(n, q, slope="", word=(), power=1):
    return json.loads(_core.oracle_json(n, q, slope, list(word), power))


def coxeter(n):
    return json.loads(_core.coxeter_json(n))


def render(report, format="table"):
    return _core.render(json.dumps(report), format)
