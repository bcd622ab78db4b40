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

from typing import Any, Dict

import yaml

from koszullift.kernel.exceptions import InputFormatError


class Configuration:
    def __init__(self, filepath: str = None):
        """
        Initialization for the configuration object
        :param filepath: path to a yml configuration file for KoszulLift
        """
        if filepath is not None:
            self.load_file(filepath)
        else:
            self.config = None

    def load_file(self, filepath: str):
        """
        Helper function to load a yaml file
        :param filepath: path to a yml configuration file for KoszulLift
        """
        try:
            with open(filepath, 'r') as ymlfile:
                self.config = yaml.safe_load(ymlfile)
        except (OSError, yaml.YAMLError) as e:
            raise InputFormatError('Cannot read configuration %s: %s' % (filepath, e))
        if self.config is not None and not isinstance(self.config, dict):
            raise InputFormatError('Configuration %s is not a mapping' % filepath)

    def section(self, name: str) -> Dict[str, Any]:
        """
        :param name: top level key, e.g. 'engine'
        :return: the section, empty when there is no configuration or no such section
        """
        if not self.config:
            return {}
        return dict(self.config.get(name) or {})
