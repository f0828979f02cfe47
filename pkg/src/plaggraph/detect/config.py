"""
Settings of a detection run.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from ..exceptions import InvalidConfigError

METHODS = ('graph', 'trigram', 'both')
OUTPUTS = ('json', 'text')


def validate_detection_arguments(ratio: float,
                                 theta: float,
                                 doc_threshold: float,
                                 method: str,
                                 output: str) -> dict:
    """Validate the arguments of a detection run.

    Args:
        ratio (float): Fraction of sentences kept as important, in (0, 1].
        theta (float): Sentence match threshold, in (0, 1].
        doc_threshold (float): Suspect coverage from which a document is plagiarized, in [0, 1].
        method (str): One of 'graph', 'trigram' or 'both'.
        output (str): One of 'json' or 'text'.

    Raises:
        InvalidConfigError: A value is out of range.

    Returns:
        dict: ratio, theta, doc_threshold, method, output
    """
    if not 0 < ratio <= 1:
        raise InvalidConfigError(f'ratio = {ratio} must be in (0, 1].')
    if not 0 < theta <= 1:
        raise InvalidConfigError(f'theta = {theta} must be in (0, 1].')
    if not 0 <= doc_threshold <= 1:
        raise InvalidConfigError(f'doc_threshold = {doc_threshold} must be in [0, 1].')
    if method not in METHODS:
        raise InvalidConfigError(f'method = {method} must be one of {", ".join(METHODS)}.')
    if output not in OUTPUTS:
        raise InvalidConfigError(f'output = {output} must be one of {", ".join(OUTPUTS)}.')
    return {'ratio': float(ratio),
            'theta': float(theta),
            'doc_threshold': float(doc_threshold),
            'method': method,
            'output': output}


@dataclass(frozen=True)
class DetectionConfig:  # pylint: disable=too-many-instance-attributes
    """Settings of a detection run.

    Attributes:
        stoplist_path (str | None): Stop word file, None for the bundled list.
        lexicon_path (str | None): Lexicon file, None for the pass-through lexicon.
        ratio (float): Fraction of sentences kept as important.
        theta (float): Sentence match threshold.
        doc_threshold (float): Suspect coverage from which a document is plagiarized.
        method (str): 'graph', 'trigram' or 'both'.
        output (str): 'json' or 'text'.
        report_all (bool): Report pairs without any match too.
        jobs (int): Worker threads.
    """
    stoplist_path: str | None = None
    lexicon_path: str | None = None
    ratio: float = 0.5
    theta: float = 0.65
    doc_threshold: float = 0.25
    method: str = 'graph'
    output: str = 'text'
    report_all: bool = False
    jobs: int = 1

    def __post_init__(self):
        validate_detection_arguments(ratio=self.ratio,
                                     theta=self.theta,
                                     doc_threshold=self.doc_threshold,
                                     method=self.method,
                                     output=self.output)
        if self.jobs < 1:
            raise InvalidConfigError(f'jobs = {self.jobs} must be at least 1.')

    @property
    def uses_graph(self) -> bool:
        """Whether the graph method runs.

        Returns:
            bool: True for 'graph' and 'both'.
        """
        return self.method in ('graph', 'both')

    @property
    def uses_trigram(self) -> bool:
        """Whether the trigram baseline runs.

        Returns:
            bool: True for 'trigram' and 'both'.
        """
        return self.method in ('trigram', 'both')

    def as_dict(self) -> dict:
        """The settings echoed in report headers.

        Returns:
            dict: Settings.
        """
        return asdict(self)
