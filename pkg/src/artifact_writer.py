"""
Artifact Writer Module

Single Responsibility: Put artifact text on disk atomically.
"""

import logging
import os
import tempfile

logger = logging.getLogger(__name__)


class ArtifactWriter:
    """Writes through a temporary file in the target directory, then renames it."""

    def write(self, path: str, text: str) -> None:
        """
        Replace path with text in one rename.

        Raises:
            OSError: If the directory is missing or not writable
        """
        directory = os.path.dirname(os.path.abspath(path))
        fd, temp_path = tempfile.mkstemp(prefix=".qcorr-", suffix=".tmp", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
            os.replace(temp_path, path)
        except BaseException:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
            raise
        logger.info("Wrote %d bytes to %s", len(text.encode("utf-8")), path)
