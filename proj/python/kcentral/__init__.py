from ._kcentral import *  # noqa: F401,F403
from ._kcentral import __doc__  # noqa: F401
