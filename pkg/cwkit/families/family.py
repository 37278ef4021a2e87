"""
family.py
====================================
Base class of the graph families that cwkit can construct by name.
"""

from ..exceptions import InvalidParameterError

__all__ = ["BaseFamily"]


class BaseFamily:
    """This class is a base class for all graph families. It should not be instantiated
    directly. Instead, instantiate a child class specific to one family, for example `JGraph`
    for the graphs J_k or `SPlusGraph` for S^+_k.

    The child class should implement the following methods:

    * __init__, which calls _initialize_family_params()

    * _validate

    * _build

    The graph is built once, on first access of :attr:`graph`, and cached.
    """

    #: the k of the k-path layout when the family consists of path powers, else None
    path_power_k = None

    def __init__(self, **kwargs):
        self._initialize_family_params(kwargs, {})

    def _initialize_family_params(self, params, default_params):
        """Overrides `default_params` with the entries of `params` and validates the result.

        IF YOU ARE IMPLEMENTING A NEW FAMILY, YOU SHOULD NOT NEED TO OVERRIDE THIS METHOD.

        :param params: parameters given by the caller
        :type params: Dict
        :param default_params: every parameter the family accepts, with its default
        :type default_params: Dict
        :raises InvalidParameterError: if a parameter is unknown or out of range
        """
        self._graph = None
        self._distinguished = None
        self.params = dict(default_params)

        if params is None:
            params = dict()

        unknown = set(params) - set(self.params)
        if unknown:
            raise InvalidParameterError(
                f"{type(self).__name__} got unknown parameters {sorted(unknown)}, "
                f"expected some of {sorted(self.params)}"
            )
        for key in self.params.keys():
            if key in params and params[key] is not None:
                self.params[key] = params[key]

        self._validate()

    def _validate(self):
        """Checks the parameter ranges.

        :raises InvalidParameterError: if a parameter is out of range
        """
        raise NotImplementedError

    def _build(self):
        """Constructs the graph.

        :return: the graph and the id of its distinguished vertex (or None)
        :rtype: Tuple[Graph, Optional[int]]
        """
        raise NotImplementedError

    def _require(self, condition, message):
        if not condition:
            raise InvalidParameterError(
                f"{type(self).__name__}: {message}, got {self.params}"
            )

    def _ensure_built(self):
        if self._graph is None:
            self._graph, self._distinguished = self._build()

    @property
    def graph(self):
        self._ensure_built()
        return self._graph

    @property
    def distinguished(self):
        """Id of the vertex the family singles out (z_g of J_k, w^+ of S^+_k), or None."""
        self._ensure_built()
        return self._distinguished

    @property
    def has_been_built(self):
        return self._graph is not None

    def __str__(self):
        params = ", ".join(f"{key}={value}" for key, value in self.params.items())
        return f"{type(self).__name__}({params})"
