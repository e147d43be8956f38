class ParseError(ValueError):
    """Text that cannot be read as a value, state or model file."""


class ModelError(ValueError):
    """A reference to something the model does not contain."""


class MissingPreferences(ModelError):
    """The model carries no preference orders (e.g. a framing-only case)."""
