"""Exception types shared across the simulator and kernel library."""


class XbarError(Exception):
    """Base class for all simulator errors."""


class ConfigError(XbarError):
    """Invalid crossbar or partition configuration."""


class LayoutError(XbarError):
    """Operand placement violates the layout policy (overlap, out of bounds)."""


class DimensionError(XbarError):
    """Problem shape cannot be placed on the crossbar ("not supported")."""


class ConflictError(XbarError):
    """A cycle bundle claims the same partition group from two operations.

    :param message: human-readable description
    :param op_a: index of the first offending op within the bundle (or None)
    :param op_b: index of the second offending op (or None for single-op errors)
    :param group: contested partition group index (or None)
    :param bundle_index: set by run_program to the offending bundle position
    """

    def __init__(self, message, op_a=None, op_b=None, group=None, bundle_index=None):
        super().__init__(message)
        self.op_a = op_a
        self.op_b = op_b
        self.group = group
        self.bundle_index = bundle_index
