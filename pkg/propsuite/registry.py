"""
Declarative property registry.

A property names its model, its argument fields (see propsuite.cases), a
generator drawing one case from a CaseStream and a check returning an
AxiomReport. Registration is a decorator on the check:

    @registry.property('rc.only-two-components', model='rational-circle',
                       fields={'x': Field(RATIONAL), 'y': Field(RATIONAL)},
                       generate=lambda stream, bundle: dict(zip('xy', stream.rationals(2))))
    def only_two_components(bundle, x, y):
        ...
"""
from dataclasses import dataclass
from typing import Callable

from .exceptions import SuiteError, UnknownProperty


@dataclass(frozen=True)
class Property:
    id: str
    model: str
    fields: dict
    generate: Callable
    check: Callable
    description: str = ''

    @property
    def arity(self):
        return len(self.fields)

    def encode(self, case, bundle):
        return {name: field.encode(case[name], bundle) for name, field in self.fields.items()}

    def decode(self, data, bundle):
        missing = set(self.fields) - set(data)
        if missing:
            raise SuiteError(f'{self.id}: case is missing {sorted(missing)}')
        return {name: field.decode(data[name], bundle) for name, field in self.fields.items()}

    def to_dict(self):
        return {
            'id': self.id,
            'model': self.model,
            'arity': self.arity,
            'fields': {name: field.kind for name, field in self.fields.items()},
            'description': self.description,
        }


class Registry:
    def __init__(self):
        self._properties = {}

    def property(self, property_id, model, fields, generate):
        def decorator(check):
            if property_id in self._properties:
                raise ValueError(f'Property {property_id} is already registered')
            self._properties[property_id] = Property(
                property_id,
                model,
                fields,
                generate,
                check,
                description=(check.__doc__ or '').strip(),
            )
            return check
        return decorator

    def get(self, property_id):
        try:
            return self._properties[property_id]
        except KeyError:
            raise UnknownProperty(f'Unknown property {property_id!r}') from None

    def select(self, property_ids=()):
        """Registered properties sorted by id, restricted to property_ids when given."""
        for property_id in property_ids:
            self.get(property_id)
        ids = sorted(property_ids or self._properties)
        return [self._properties[property_id] for property_id in ids]

    def ids(self):
        return sorted(self._properties)

    def __contains__(self, property_id):
        return property_id in self._properties

    def __len__(self):
        return len(self._properties)
