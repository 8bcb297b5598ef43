"""Exception types raised across the toolkit. All inherit ReqlensError so
the CLI can map any data/domain failure to a single nonzero exit path."""


class ReqlensError(Exception):
    pass


class MalformedRecord(ReqlensError):
    def __init__(self, line: int, detail: str = ""):
        self.line = line
        super().__init__(f"line {line}: malformed record{': ' + detail if detail else ''}")


class UnknownLabel(ReqlensError):
    def __init__(self, line: int, token: str):
        self.line = line
        self.token = token
        super().__init__(f"line {line}: unknown label {token!r}")


class EmptyText(ReqlensError):
    def __init__(self, line: int):
        self.line = line
        super().__init__(f"line {line}: empty requirement text")


class InvalidFraction(ReqlensError):
    pass


class EmptyDataset(ReqlensError):
    pass


class EmptyCorpus(ReqlensError):
    pass


class EmptyNode(ReqlensError):
    pass


class EmptyTrainingSet(ReqlensError):
    pass


class EmptyTestSet(ReqlensError):
    pass


class EmptyDocument(ReqlensError):
    pass


class NonPositiveSigma(ReqlensError):
    pass


class SingularSystem(ReqlensError):
    pass


class InsufficientSample(ReqlensError):
    pass


class ZeroTotal(ReqlensError):
    pass


class InvalidStem(ReqlensError):
    pass
