"""Exception hierarchy shared by all shellab modules."""


class ShellabError(Exception):
    """Base class for all errors raised by this package."""


class CycleDetectedError(ShellabError):
    """The supplied cover relation contains a directed cycle."""


class NotBoundedError(ShellabError):
    """The poset lacks a unique minimum or a unique maximum."""


class RedundantCoverError(ShellabError):
    """A supplied cover pair is implied by transitivity of the others."""


class InvalidRootError(ShellabError):
    """A chain offered as a root is not a maximal chain of the bottom interval."""


class MissingLabelError(ShellabError):
    """A chain-edge labeling table has no entry for a rooted cover relation."""


class MissingFirstAtomError(ShellabError):
    """A first-atom table has no entry for a rooted interval and no default applies."""


class AmbiguousOrderError(ShellabError):
    """Two distinct maximal chains share a label sequence and tie-breaking is off."""


class AmbiguousRootError(ShellabError):
    """An interval bottom has several roots and none was supplied."""


class BudgetExceededError(ShellabError):
    """An enumeration or search exceeded its configured budget."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = dict(diagnostics)


class NotAnRfasError(ShellabError):
    """A first-atom table failed recursive first atom set validation."""


class NoLcExtensionError(ShellabError):
    """No linear extension of the chain order satisfies the compatibility condition."""


class NotTclError(ShellabError):
    """The labeling is not a TCL-labeling, so the requested construction is undefined."""


class EmptyIntervalError(ShellabError):
    """An open interval contains no elements."""


class NotAShellingError(ShellabError):
    """The facet order violates the shelling condition."""


class MalformedCertificateError(ShellabError):
    """A recursive atom ordering certificate does not match the poset shape."""


class UnknownNameError(ShellabError):
    """No built-in example with the requested name exists."""
