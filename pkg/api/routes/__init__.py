from .modularity import modularity_router
from .partition import partition_router
from .verification import verification_router
