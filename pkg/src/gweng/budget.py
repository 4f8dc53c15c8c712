"""Resource bounds for position enumeration.

Every operation that enumerates plays takes a Budget and truncates its
output accordingly, so all objects stay finite.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    max_play_length: int = 24
    max_threads: int = 3
    max_enum: int = 200000

    def with_length(self, n):
        return Budget(n, self.max_threads, self.max_enum)


DEFAULT = Budget()
