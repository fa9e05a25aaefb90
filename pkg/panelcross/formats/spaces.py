"""Learning-space files: ``{"domain": [...], "states": [[...], ...]}``."""
import json

from ..errors import ParseError, ValidationError
from ..tiles.learning_space import LearningSpace
from ..schemas.validator import get_validator
from .streams import Source, open_text


def load_learning_space(source: Source) -> LearningSpace:
    with open_text(source) as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", row=e.lineno, column=e.colno) from e
    ok, err = get_validator().validate_learning_space_file(data)
    if not ok:
        raise ParseError(f"learning-space file does not match schema: {err}")
    try:
        return LearningSpace.from_sets(data['domain'], data['states'])
    except ValidationError as e:
        raise ParseError(str(e), path='states') from e
