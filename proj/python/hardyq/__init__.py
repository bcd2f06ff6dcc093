"""Hardy-type nonlocality, Clauser-Horne expressions and local-model feasibility."""

from ._hardyq import *  # noqa: F401,F403
from ._hardyq import __doc__  # noqa: F401
