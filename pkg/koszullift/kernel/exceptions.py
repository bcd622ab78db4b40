# Copyright (c) 2026, The KoszulLift Developers
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
# list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and/or other materials provided with the distribution.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

class KoszulLiftError(Exception):
    """Base class for every error raised by koszullift."""
    code = 'ERROR'


class InputFormatError(KoszulLiftError):
    code = 'INPUT_FORMAT'

    def __init__(self, message: str, diagnostics: dict = None):
        """
        Malformed input files or flags
        :param message: human readable summary
        :param diagnostics: field name -> list of problems, as produced by marshmallow
        """
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InvalidInputError(KoszulLiftError):
    """The input is well formed but mathematically unusable (not a lift, f not regular, ...)."""
    code = 'INVALID_INPUT'


class LevelTooLowError(KoszulLiftError):
    code = 'LEVEL_TOO_LOW'


class WrongCodimensionError(KoszulLiftError):
    code = 'WRONG_CODIM'


class DegreeBoundTooLowError(KoszulLiftError):
    code = 'DEGREE_BOUND_TOO_LOW'


class WindowError(KoszulLiftError):
    """A module or differential outside the known window was requested."""
    code = 'WINDOW'
