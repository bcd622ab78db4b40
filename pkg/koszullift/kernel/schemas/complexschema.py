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

from marshmallow import Schema, ValidationError, fields, validate, validates_schema

from koszullift.kernel.schemas.fields import matrix_field


class ComplexSchema(Schema):
    over = fields.String(required=True, validate=validate.OneOf(['Q', 'R']))
    window = fields.List(fields.Integer(strict=True), required=True, validate=validate.Length(equal=2))
    twists = fields.Dict(keys=fields.Integer(), values=fields.List(fields.Integer(strict=True)), required=True)
    diffs = fields.Dict(keys=fields.Integer(), values=matrix_field(), load_default=dict)
    bounded_below = fields.Boolean(load_default=False)
    bounded_above = fields.Boolean(load_default=False)
    lift = fields.Boolean(load_default=False)
    caveat = fields.String(load_default=None, allow_none=True)

    @validates_schema
    def validate_window(self, data, **kwargs):
        lo, hi = data['window']
        if lo > hi:
            raise ValidationError('The window must satisfy lo <= hi.', 'window')
        missing = [n for n in range(lo, hi + 1) if n not in data['twists']]
        if missing:
            raise ValidationError('Twists missing for degrees %s.' % missing, 'twists')
        extra = sorted(n for n in data['twists'] if not lo <= n <= hi)
        if extra:
            raise ValidationError('Twists given outside the window: %s.' % extra, 'twists')
