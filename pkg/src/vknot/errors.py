"""Exception hierarchy shared by all vknot modules."""


class VknotError(Exception):
    """Base class for all vknot errors."""


class CodeSyntaxError(VknotError):
    """Input text does not match the Gauss-code or braid-word grammar."""


class SignMismatch(VknotError):
    """The two occurrences of a chord carry different signs."""


class PassageDuplicate(VknotError):
    """A chord id occurs twice with the same passage (two O or two U)."""


class DanglingChord(VknotError):
    """A chord id occurs exactly once."""


class MultiComponent(VknotError):
    """Operation requires a single-component code."""


class NoSuchChord(VknotError):
    """Chord id not present in the code."""


class NotApplicable(VknotError):
    """Move pattern does not match at the requested site."""


class EmptyCode(VknotError):
    """Operation requires at least one crossing."""


class ZeroBracket(VknotError):
    """Bracket polynomial is zero; span undefined."""


class SizeCap(VknotError):
    """Requested computation exceeds the configured size cap."""


class NotBiquandle(VknotError):
    """Operation requires the biquandle property."""


class UnknownCatalogName(VknotError):
    """Name not present in the shipped catalog."""


class IndexOutOfRange(VknotError):
    """Face index outside 1..n."""
