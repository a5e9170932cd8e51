"""Shared exception types.

Every failure mode that callers are expected to handle gets its own class;
all of them derive from ForgeError so the CLI can map them to exit codes.
"""


class ForgeError(Exception):
    """Base class for all library errors."""


class ValidationError(ForgeError):
    """Generic input problem (unknown labels, malformed structures)."""


# --- matroid construction ---

class EmptyCircuit(ValidationError):
    pass


class NonAntichain(ValidationError):
    def __init__(self, small, large):
        self.small, self.large = small, large
        super().__init__(f"circuit {sorted(small)} is contained in {sorted(large)}")


class EliminationFailure(ValidationError):
    def __init__(self, first, second, x, z):
        self.first, self.second, self.x, self.z = first, second, x, z
        super().__init__(
            f"no circuit through {z!r} inside "
            f"({sorted(first)} u {sorted(second)}) - {x!r}"
        )


class GroundCapExceeded(ValidationError):
    def __init__(self, size, cap):
        self.size, self.cap = size, cap
        super().__init__(f"ground set has {size} elements, cap is {cap}")


class OverlappingSets(ValidationError):
    pass


class NotABase(ValidationError):
    pass


class Disconnected(ForgeError):
    pass


class DecompositionRequestedOnOddSet(ForgeError):
    def __init__(self, witness_circuit):
        self.witness_circuit = witness_circuit
        super().__init__(f"set meets circuit {sorted(witness_circuit)} oddly")


# --- cyclic orders ---

class CyclicOrderViolation(ValidationError):
    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(f"{message}: witness {witness}")


class CyclicityViolation(CyclicOrderViolation):
    def __init__(self, witness):
        super().__init__(witness, "cyclicity fails")


class AsymmetryViolation(CyclicOrderViolation):
    def __init__(self, witness):
        super().__init__(witness, "asymmetry fails")


class TransitivityViolation(CyclicOrderViolation):
    def __init__(self, witness):
        super().__init__(witness, "transitivity fails")


class TotalityViolation(CyclicOrderViolation):
    def __init__(self, witness):
        super().__init__(witness, "totality fails")


class NotASubset(ValidationError):
    pass


class SingletonOrder(ForgeError):
    pass


class EmptySelection(ValidationError):
    pass


# --- signings and frameworks ---

class DomainMismatch(ValidationError):
    pass


class InconsistentTraversal(ValidationError):
    pass


class InconsistentBondSides(ValidationError):
    pass


class NoWitnessCocircuit(ForgeError):
    pass


class NotACyclicOrder(ForgeError):
    def __init__(self, circuit, cause):
        self.circuit, self.cause = circuit, cause
        super().__init__(f"derived relation on {sorted(circuit)} is not a cyclic order: {cause}")


class NotGraphic(ForgeError):
    """Raised by pipelines that need a framework when none exists."""


# --- realizer ---

class LabelMismatch(ValidationError):
    pass


class NotConnected(ForgeError):
    pass


class NotAVertex(ValidationError):
    pass


class NotACut(ForgeError):
    def __init__(self, witness_circuit):
        self.witness_circuit = witness_circuit
        super().__init__(f"edge set meets cycle {sorted(witness_circuit)} oddly, not a cut")


# --- bridges ---

class NotACircuit(ValidationError):
    pass


class NotThreeConnected(ForgeError):
    pass


class NotABridge(ValidationError):
    pass


class NoBridge(ForgeError):
    pass


class CertificateFailure(ForgeError):
    def __init__(self, message, node=None):
        self.node = node
        super().__init__(message)


# --- cli ---

class ParseError(ValidationError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
