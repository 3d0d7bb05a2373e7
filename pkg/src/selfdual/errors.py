"""Domain errors.  Each carries a stable ``kind`` used by the CLI."""


class SelfDualError(Exception):
    @property
    def kind(self):
        return type(self).__name__

    def as_dict(self):
        return {"error_kind": self.kind, "detail": str(self)}


class NotSquare(SelfDualError):
    pass


class SingularMatrix(SelfDualError):
    pass


class WrongDimensions(SelfDualError):
    pass


# matroids
class ExchangeAxiomViolation(SelfDualError):
    pass


class EmptyBasisList(SelfDualError):
    pass


class GroundSizeNotTwiceRank(SelfDualError):
    pass


# configurations
class RankDeficient(SelfDualError):
    pass


class DisconnectedSupport(SelfDualError):
    pass


class NormalFormUnavailable(SelfDualError):
    pass


class SamplerExhausted(SelfDualError):
    pass


class DegenerateParameters(SelfDualError):
    pass


# octads
class NotOnGrassmannian(SelfDualError):
    pass


class OnTwistedCubicOrConicProjection(SelfDualError):
    pass


class DegenerateSevenPoints(SelfDualError):
    pass


# graph curves
class NotConnected(SelfDualError):
    pass


class NotTrivalent(SelfDualError):
    pass


class DegenerateHyperplane(SelfDualError):
    pass


class GenericityNotCertified(SelfDualError):
    pass


class MalformedGraph6(SelfDualError):
    pass


# tropical
class NotAMatroid(SelfDualError):
    pass


class NotATreePoint(SelfDualError):
    pass


class BadIndices(SelfDualError):
    pass


# mukai
class WrongGenus(SelfDualError):
    pass


class WrongLength(SelfDualError):
    pass


class NotSkew(SelfDualError):
    pass
