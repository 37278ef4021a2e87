# type: ignore[attr-defined]
"""clique-width toolkit: the graph families, width certificates and exact solvers"""

import importlib
import importlib.util
import inspect

try:
    from importlib import metadata as importlib_metadata
except ImportError:  # for Python<3.8
    import importlib_metadata as importlib_metadata

from .bubble import *
from .constants import *
from .embed import *
from .exceptions import *
from .expr import *
from .families import *
from .graph import *
from .solver import *
from .synth import *
from .verify import *


def _load_class(registry, name, package, what):
    if name not in registry:
        raise ValueError(f"unknown {what} {name!r}, expected one of {sorted(registry)}")
    module_path = registry[name]

    spec = importlib.util.spec_from_file_location(
        name=f"cwkit.{package}.{module_path.replace('/', '.')}",
        location=f"{PACKAGE_PATH}/{package.replace('.', '/')}/{module_path}.py",
    )

    module = importlib.util.module_from_spec(spec)

    spec.loader.exec_module(module)

    class_name = getattr(module, "class_name")

    return getattr(module, class_name)


def _instantiate(cls, name, params, *args):
    try:
        inspect.signature(cls).bind(*args, **params)
    except TypeError as e:
        raise InvalidParameterError(f"{name}: {e}") from e
    return cls(*args, **params)


def get_family(family_name, **kwargs):
    """Get a graph family object by name. This is the main entry point for building graphs.

    Keep in mind that the keyword arguments are family-specific!

    :param family_name: the name of the family, e.g. "J" or "S+"
    :type family_name: str
    :raises ValueError: if the family name is unknown
    :return: a family object; its `graph` attribute holds the graph
    :rtype: BaseFamily

    **Example**

    .. code-block:: python

        import cwkit

        family = cwkit.get_family("J", k=3)
        graph = family.graph
        hole = family.distinguished
    """
    cls = _load_class(FAMILY_MODULES, family_name, "families", "family")
    params = dict(FAMILY_PRESETS.get(family_name, {}))
    params.update(kwargs)
    return _instantiate(cls, family_name, params)


def get_all_family_names():
    """Get a list of all family names.

    :return: a list of family names
    :rtype: List
    """

    return list(FAMILY_MODULES)


def get_claim(claim_id, **kwargs):
    """Get a claim object by id; call its `run` method to check it.

    :param claim_id: the claim id, e.g. "lemma2" or "prop5.1"
    :type claim_id: str
    :raises ValueError: if the claim id is unknown
    :raises InvalidParameterError: if a parameter is unknown to the claim
    :return: a claim object
    :rtype: BaseClaim

    **Example**

    .. code-block:: python

        import cwkit

        check = cwkit.get_claim("lemma2", k=[3, 4]).run()
        print(check.status)
    """
    cls = _load_class(CLAIM_MODULES, claim_id, "verify.claims", "claim")
    return _instantiate(cls, claim_id, kwargs, claim_id)


def get_all_claim_ids():
    """Get a list of all claim ids.

    :return: a list of claim ids
    :rtype: List
    """

    return list(CLAIM_MODULES)


def get_version() -> str:
    """Get the version of the library.

    :return: the version of the library
    :rtype: str
    """
    try:
        return importlib_metadata.version(__name__)
    except importlib_metadata.PackageNotFoundError:  # pragma: no cover
        return "unknown"


version: str = get_version()
