"""Exception types shared across the package."""


class TreeMinError(Exception):
    pass


class CycleDetected(TreeMinError):
    pass


class DanglingParent(TreeMinError):
    pass


class IsRoot(TreeMinError):
    pass


class DeadNode(TreeMinError):
    pass


class NotAPathForest(TreeMinError):
    pass


class Empty(TreeMinError):
    pass


class DuplicateElement(TreeMinError):
    pass


class NotPresent(TreeMinError):
    pass


class AlreadyPresent(TreeMinError):
    pass


class OutOfOrder(TreeMinError):
    pass


class ModeMismatch(TreeMinError):
    pass


class Disconnected(TreeMinError):
    pass


class TooLarge(TreeMinError):
    pass


class BadParams(TreeMinError):
    pass


class OracleMismatch(TreeMinError):
    pass
