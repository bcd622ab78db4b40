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

from marshmallow import Schema, ValidationError, fields, post_load, validates_schema

from koszullift.kernel.schemas.fields import matrix_field


class PresentationSchema(Schema):
    twists = fields.List(fields.Integer(strict=True), required=True)
    relations = matrix_field(load_default=list)
    relation_twists = fields.List(fields.Integer(strict=True), load_default=list)

    @validates_schema
    def validate_shape(self, data, **kwargs):
        relations, relation_twists = data['relations'], data['relation_twists']
        if not relation_twists:
            if any(row for row in relations):
                raise ValidationError('Relations given without relation_twists.', 'relation_twists')
            return
        if len(relations) != len(data['twists']):
            raise ValidationError('One row of relations per generator is required.', 'relations')
        if any(len(row) != len(relation_twists) for row in relations):
            raise ValidationError('One column per relation twist is required.', 'relations')

    @post_load
    def fill_empty_rows(self, data, **kwargs):
        if not data['relation_twists']:
            data['relations'] = [[] for _ in data['twists']]
        return data
