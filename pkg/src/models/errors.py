"""Exceptions raised by the rooted-order toolkit."""


class RootedOrderError(ValueError):
    """Base class for every domain error."""


class UniverseMismatchError(RootedOrderError):
    pass


class VertexLabelError(RootedOrderError):
    pass


class NotSquarefreeError(RootedOrderError):
    pass


class SizeLimitError(RootedOrderError):
    """An exponential enumeration would exceed its configured cap."""


class BudgetExceededError(SizeLimitError):
    """A verification request falls outside its configured budget.

    Batch drivers turn this into a skip record instead of a failure.
    """


class ChordalityError(RootedOrderError):
    pass


class ConstructionIntegrityError(RootedOrderError):
    """A rooted-list construction produced the same monomial twice."""


class ChooserScriptError(RootedOrderError):
    pass


class NotInPowerError(RootedOrderError):
    """A monomial is not an s-fold product of the given generators."""


class CharacterizationScopeError(RootedOrderError):
    """The pairwise characterization was requested outside path graphs."""


class GraphFormatError(RootedOrderError):
    pass
